#pragma once

#include <cstdint>
#include <vector>

#include "ust/geometry.hpp"

namespace ust {

// Node of the implicit 1D dyadic tree over a padded universe of 2^levels
// slabs, identified purely by arithmetic. Level 0 is the root; a node
// covers the rank interval [index << (levels - level), (index+1) << (levels - level)).
// Nothing is materialized here: parents and children are shift operations.
struct DyadicNode1D {
  std::uint32_t level = 0;
  std::uint64_t index = 0;

  friend auto operator<=>(const DyadicNode1D&, const DyadicNode1D&) = default;
};

// Rank interval represented by the node in a universe of the given height.
RankInterval interval_of(DyadicNode1D node, std::uint32_t levels);

// True iff outer's interval contains inner's, i.e. outer is an
// ancestor-or-self of inner. Independent of the universe height.
bool contains_1d(DyadicNode1D outer, DyadicNode1D inner);

// The unique minimal set of maximal dyadic nodes tiling [lo, hi),
// ordered left to right. Members are pairwise disjoint and there are at
// most 2 per level. Throws on an empty interval.
std::vector<DyadicNode1D> canonical_cover_1d(RankInterval interval, std::uint32_t levels);

// Strict ancestors, nearest first (level-1 down to the root). Length == level.
std::vector<DyadicNode1D> ancestors_1d(DyadicNode1D node);

// Root-to-leaf path of the levels+1 nodes whose intervals contain the slab.
std::vector<DyadicNode1D> stab_path_1d(std::uint64_t slab, std::uint32_t levels);

}  // namespace ust
