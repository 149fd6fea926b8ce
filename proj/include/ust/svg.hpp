#pragma once

#include <string>

#include "ust/tree.hpp"

namespace ust {

// Diamond view of the tree: one rhombus cell per unit (x-level, y-level),
// root unit at the top, x-levels increasing down-left and y-levels
// down-right. Cells are labeled with their node and stored-id counts.
std::string render_diamond_svg(const UnifiedSegmentTree& tree);

}  // namespace ust
