#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ust/geometry.hpp"
#include "ust/tree.hpp"

namespace ust {

// Brute-force reference answers, O(n) per query. These share the
// core geometry predicates with the index on purpose: a disagreement
// between index and oracle then isolates a structural bug rather than
// predicate drift. Ground truth for the property tests and selfcheck.

// Ids of all rects containing the point under the half-open rule, sorted.
std::vector<std::int64_t> oracle_stab(std::span<const Rect> rects, Point p);

// Ids of all rects overlapping the query with positive area, sorted.
std::vector<std::int64_t> oracle_intersect(std::span<const Rect> rects, const Rect& query);

// True iff the pieces tile the rank region exactly: every elementary cell
// of the region is covered by exactly one piece and no piece leaks
// outside. Intended for desk-scale universes (cells are enumerated).
bool oracle_cover_check(std::span<const DyadicAddress> pieces, RankInterval x_region,
                        RankInterval y_region, std::uint32_t x_levels, std::uint32_t y_levels);

}  // namespace ust
