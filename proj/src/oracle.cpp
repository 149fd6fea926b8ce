#include "ust/oracle.hpp"

#include <algorithm>

namespace ust {

std::vector<std::int64_t> oracle_stab(std::span<const Rect> rects, Point p) {
  std::vector<std::int64_t> out;
  for (const Rect& r : rects)
    if (r.min_x <= p.x && p.x < r.max_x && r.min_y <= p.y && p.y < r.max_y)
      out.push_back(r.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> oracle_intersect(std::span<const Rect> rects, const Rect& query) {
  std::vector<std::int64_t> out;
  for (const Rect& r : rects)
    if (rects_overlap(r, query)) out.push_back(r.id);
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_cover_check(std::span<const DyadicAddress> pieces, RankInterval x_region,
                        RankInterval y_region, std::uint32_t x_levels, std::uint32_t y_levels) {
  if (x_region.lo >= x_region.hi || y_region.lo >= y_region.hi) return false;
  const std::uint64_t width = x_region.hi - x_region.lo;
  const std::uint64_t height = y_region.hi - y_region.lo;
  std::vector<std::uint8_t> count(width * height, 0);
  for (const DyadicAddress& piece : pieces) {
    const RankInterval px = interval_of(piece.x, x_levels);
    const RankInterval py = interval_of(piece.y, y_levels);
    if (px.lo < x_region.lo || px.hi > x_region.hi) return false;
    if (py.lo < y_region.lo || py.hi > y_region.hi) return false;
    for (std::uint64_t cx = px.lo; cx < px.hi; ++cx)
      for (std::uint64_t cy = py.lo; cy < py.hi; ++cy) {
        std::uint8_t& c = count[(cx - x_region.lo) * height + (cy - y_region.lo)];
        if (c == 1) return false;  // double cover
        c = 1;
      }
  }
  return std::all_of(count.begin(), count.end(), [](std::uint8_t c) { return c == 1; });
}

}  // namespace ust
