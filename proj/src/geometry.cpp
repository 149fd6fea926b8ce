#include "ust/geometry.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace ust {

void validate(const Rect& rect) {
  if (rect.id < 0)
    throw InvalidRect("rect id must be non-negative, got " + std::to_string(rect.id));
  if (rect.min_x >= rect.max_x || rect.min_y >= rect.max_y)
    throw InvalidRect("degenerate rect id " + std::to_string(rect.id) + ": (" +
                      std::to_string(rect.min_x) + "," + std::to_string(rect.min_y) + "," +
                      std::to_string(rect.max_x) + "," + std::to_string(rect.max_y) + ")");
}

bool rects_overlap(const Rect& a, const Rect& b) {
  return std::max(a.min_x, b.min_x) < std::min(a.max_x, b.max_x) &&
         std::max(a.min_y, b.min_y) < std::min(a.max_y, b.max_y);
}

const char* to_string(IntersectionKind kind) {
  switch (kind) {
    case IntersectionKind::Disjoint: return "Disjoint";
    case IntersectionKind::Equal: return "Equal";
    case IntersectionKind::AInsideB: return "AInsideB";
    case IntersectionKind::BInsideA: return "BInsideA";
    case IntersectionKind::ACrossesB: return "ACrossesB";
    case IntersectionKind::BCrossesA: return "BCrossesA";
    case IntersectionKind::Partial: return "Partial";
  }
  return "?";
}

IntersectionKind classify_intersection(const Rect& a, const Rect& b) {
  if (!rects_overlap(a, b)) return IntersectionKind::Disjoint;
  const bool x_a_in_b = b.min_x <= a.min_x && a.max_x <= b.max_x;
  const bool x_b_in_a = a.min_x <= b.min_x && b.max_x <= a.max_x;
  const bool y_a_in_b = b.min_y <= a.min_y && a.max_y <= b.max_y;
  const bool y_b_in_a = a.min_y <= b.min_y && b.max_y <= a.max_y;
  if (x_a_in_b && x_b_in_a && y_a_in_b && y_b_in_a) return IntersectionKind::Equal;
  if (x_a_in_b && y_a_in_b) return IntersectionKind::AInsideB;
  if (x_b_in_a && y_b_in_a) return IntersectionKind::BInsideA;
  if (x_a_in_b && y_b_in_a) return IntersectionKind::ACrossesB;
  if (x_b_in_a && y_a_in_b) return IntersectionKind::BCrossesA;
  return IntersectionKind::Partial;
}

namespace {

std::uint32_t levels_for(std::uint64_t slab_count) {
  if (slab_count <= 1) return 0;
  return static_cast<std::uint32_t>(std::bit_width(slab_count - 1));
}

void check_strictly_increasing(const std::vector<std::int64_t>& endpoints) {
  for (std::size_t i = 1; i < endpoints.size(); ++i)
    if (endpoints[i - 1] >= endpoints[i]) throw Error("endpoints must be strictly increasing");
}

}  // namespace

CoordinateMap::CoordinateMap(std::vector<std::int64_t> x_endpoints,
                             std::vector<std::int64_t> y_endpoints)
    : x_endpoints_(std::move(x_endpoints)), y_endpoints_(std::move(y_endpoints)) {
  check_strictly_increasing(x_endpoints_);
  check_strictly_increasing(y_endpoints_);
  x_levels_ = levels_for(slab_count(Axis::X));
  y_levels_ = levels_for(slab_count(Axis::Y));
}

std::optional<std::uint64_t> CoordinateMap::slab_of(Axis axis, std::int64_t coord) const {
  const auto& e = endpoints(axis);
  if (e.size() < 2 || coord < e.front() || coord >= e.back()) return std::nullopt;
  auto it = std::upper_bound(e.begin(), e.end(), coord);
  return static_cast<std::uint64_t>(it - e.begin() - 1);
}

std::optional<std::uint64_t> CoordinateMap::rank_of(Axis axis, std::int64_t coord) const {
  const auto& e = endpoints(axis);
  auto it = std::lower_bound(e.begin(), e.end(), coord);
  if (it == e.end() || *it != coord) return std::nullopt;
  return static_cast<std::uint64_t>(it - e.begin());
}

RankInterval CoordinateMap::rank_interval(Axis axis, std::int64_t lo_coord,
                                          std::int64_t hi_coord) const {
  if (lo_coord >= hi_coord)
    throw Error("rank_interval: lo_coord must be less than hi_coord");
  auto lo = rank_of(axis, lo_coord);
  auto hi = rank_of(axis, hi_coord);
  if (!lo || !hi)
    throw UnregisteredEndpoint("coordinate " +
                               std::to_string(!lo ? lo_coord : hi_coord) +
                               " is not a registered endpoint on axis " +
                               (axis == Axis::X ? "x" : "y"));
  return {*lo, *hi};
}

CoordinateMap build_coordinate_map(std::span<const Rect> rects) {
  std::unordered_set<std::int64_t> ids;
  ids.reserve(rects.size());
  std::vector<std::int64_t> xs, ys;
  xs.reserve(rects.size() * 2);
  ys.reserve(rects.size() * 2);
  for (const Rect& r : rects) {
    validate(r);
    if (!ids.insert(r.id).second)
      throw DuplicateId("duplicate rect id " + std::to_string(r.id));
    xs.push_back(r.min_x);
    xs.push_back(r.max_x);
    ys.push_back(r.min_y);
    ys.push_back(r.max_y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return CoordinateMap(std::move(xs), std::move(ys));
}

}  // namespace ust
