#include "ust/seg1d.hpp"

namespace ust {

RankInterval interval_of(DyadicNode1D node, std::uint32_t levels) {
  const std::uint32_t shift = levels - node.level;
  return {node.index << shift, (node.index + 1) << shift};
}

bool contains_1d(DyadicNode1D outer, DyadicNode1D inner) {
  if (outer.level > inner.level) return false;
  return (inner.index >> (inner.level - outer.level)) == outer.index;
}

namespace {

void cover_descend(DyadicNode1D node, std::uint32_t levels, const RankInterval& target,
                   std::vector<DyadicNode1D>& out) {
  const RankInterval span = interval_of(node, levels);
  if (target.lo <= span.lo && span.hi <= target.hi) {
    out.push_back(node);
    return;
  }
  // Split at the midpoint; half-open integer ranks make ties impossible.
  const DyadicNode1D left{node.level + 1, node.index * 2};
  const DyadicNode1D right{node.level + 1, node.index * 2 + 1};
  const std::uint64_t mid = interval_of(left, levels).hi;
  if (target.lo < mid) cover_descend(left, levels, target, out);
  if (target.hi > mid) cover_descend(right, levels, target, out);
}

}  // namespace

std::vector<DyadicNode1D> canonical_cover_1d(RankInterval interval, std::uint32_t levels) {
  if (interval.lo >= interval.hi) throw Error("canonical_cover_1d: empty interval");
  if (interval.hi > (std::uint64_t{1} << levels))
    throw Error("canonical_cover_1d: interval exceeds the universe");
  std::vector<DyadicNode1D> out;
  cover_descend({0, 0}, levels, interval, out);
  return out;
}

std::vector<DyadicNode1D> ancestors_1d(DyadicNode1D node) {
  std::vector<DyadicNode1D> out;
  out.reserve(node.level);
  while (node.level > 0) {
    node = {node.level - 1, node.index >> 1};
    out.push_back(node);
  }
  return out;
}

std::vector<DyadicNode1D> stab_path_1d(std::uint64_t slab, std::uint32_t levels) {
  std::vector<DyadicNode1D> out;
  out.reserve(levels + 1);
  for (std::uint32_t level = 0; level <= levels; ++level)
    out.push_back({level, slab >> (levels - level)});
  return out;
}

}  // namespace ust
