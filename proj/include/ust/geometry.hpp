#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ust {

// Library errors. The CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Rectangle violates the basic invariants (degenerate extent or negative id).
struct InvalidRect : Error {
  using Error::Error;
};
struct DuplicateId : Error {
  using Error::Error;
};
// A coordinate is not one of the endpoints the tree was built over.
struct UnregisteredEndpoint : Error {
  using Error::Error;
};

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

// Axis-parallel rectangle with exclusive max edges: covers
// [min_x, max_x) x [min_y, max_y). Zero-area rectangles are rejected.
struct Rect {
  std::int64_t id = 0;
  std::int64_t min_x = 0;
  std::int64_t min_y = 0;
  std::int64_t max_x = 0;
  std::int64_t max_y = 0;

  friend bool operator==(const Rect&, const Rect&) = default;
};

// Throws InvalidRect unless id >= 0, min_x < max_x and min_y < max_y.
void validate(const Rect& rect);

// True iff the shared region has positive area. Edge- or corner-touching
// rectangles do not overlap under this rule; it matches the half-open
// slab decomposition used everywhere else.
bool rects_overlap(const Rect& a, const Rect& b);

// How two rectangles relate. Exactly one kind applies to an ordered pair.
// ACrossesB: a's x-extent lies inside b's and b's y-extent lies inside a's,
// i.e. the tall rectangle a passes vertically through the wide rectangle b.
enum class IntersectionKind {
  Disjoint,
  Equal,
  AInsideB,
  BInsideA,
  ACrossesB,
  BCrossesA,
  Partial,
};

const char* to_string(IntersectionKind kind);

IntersectionKind classify_intersection(const Rect& a, const Rect& b);

enum class Axis { X, Y };

// Half-open slab interval [lo, hi) in rank space.
struct RankInterval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const RankInterval&, const RankInterval&) = default;
};

// Sorted distinct endpoints per axis. The slabs between consecutive
// endpoints form the elementary cells; each axis is padded to 2^levels
// slabs so node addresses stay purely dyadic. Slabs with rank >= slab_count
// are padding and never come out of slab_of or rank_interval.
class CoordinateMap {
 public:
  CoordinateMap() = default;
  CoordinateMap(std::vector<std::int64_t> x_endpoints, std::vector<std::int64_t> y_endpoints);

  const std::vector<std::int64_t>& endpoints(Axis axis) const {
    return axis == Axis::X ? x_endpoints_ : y_endpoints_;
  }
  std::uint64_t slab_count(Axis axis) const {
    const auto& e = endpoints(axis);
    return e.size() < 2 ? 0 : e.size() - 1;
  }
  // Height of the dyadic universe: smallest L with 2^L >= slab_count.
  std::uint32_t levels(Axis axis) const { return axis == Axis::X ? x_levels_ : y_levels_; }
  std::uint64_t universe(Axis axis) const { return std::uint64_t{1} << levels(axis); }

  // Rank k with endpoint[k] <= coord < endpoint[k+1]; nullopt outside the
  // covered range (including coord == last endpoint, which is half-open out).
  std::optional<std::uint64_t> slab_of(Axis axis, std::int64_t coord) const;

  // Exact endpoint lookup.
  std::optional<std::uint64_t> rank_of(Axis axis, std::int64_t coord) const;

  // [rank(lo_coord), rank(hi_coord)); both must be registered endpoints.
  RankInterval rank_interval(Axis axis, std::int64_t lo_coord, std::int64_t hi_coord) const;

 private:
  std::vector<std::int64_t> x_endpoints_;
  std::vector<std::int64_t> y_endpoints_;
  std::uint32_t x_levels_ = 0;
  std::uint32_t y_levels_ = 0;
};

// Collects the distinct endpoints of all rects. Validates every rect and
// id uniqueness. An empty input yields an empty map.
CoordinateMap build_coordinate_map(std::span<const Rect> rects);

}  // namespace ust
