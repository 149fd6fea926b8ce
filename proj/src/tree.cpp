#include "ust/tree.hpp"

#include <algorithm>

namespace ust {

DyadicAddress x_parent(DyadicAddress addr) {
  if (addr.x.level == 0) throw NoParent("x_parent: node is at x-level 0");
  return {{addr.x.level - 1, addr.x.index >> 1}, addr.y};
}

DyadicAddress y_parent(DyadicAddress addr) {
  if (addr.y.level == 0) throw NoParent("y_parent: node is at y-level 0");
  return {addr.x, {addr.y.level - 1, addr.y.index >> 1}};
}

std::array<DyadicAddress, 2> x_children(DyadicAddress addr, std::uint32_t x_levels) {
  if (addr.x.level >= x_levels) throw NoChild("x_children: node is at the deepest x-level");
  const DyadicNode1D left{addr.x.level + 1, addr.x.index * 2};
  const DyadicNode1D right{addr.x.level + 1, addr.x.index * 2 + 1};
  return {DyadicAddress{left, addr.y}, DyadicAddress{right, addr.y}};
}

std::array<DyadicAddress, 2> y_children(DyadicAddress addr, std::uint32_t y_levels) {
  if (addr.y.level >= y_levels) throw NoChild("y_children: node is at the deepest y-level");
  const DyadicNode1D left{addr.y.level + 1, addr.y.index * 2};
  const DyadicNode1D right{addr.y.level + 1, addr.y.index * 2 + 1};
  return {DyadicAddress{addr.x, left}, DyadicAddress{addr.x, right}};
}

std::vector<DyadicAddress> ancestors(DyadicAddress addr, bool include_self) {
  std::vector<DyadicAddress> out;
  out.reserve((addr.x.level + 1) * (addr.y.level + 1));
  for (std::uint32_t a = 0; a <= addr.x.level; ++a) {
    for (std::uint32_t b = 0; b <= addr.y.level; ++b) {
      if (!include_self && a == addr.x.level && b == addr.y.level) continue;
      out.push_back({{a, addr.x.index >> (addr.x.level - a)},
                     {b, addr.y.index >> (addr.y.level - b)}});
    }
  }
  return out;
}

bool is_descendant(DyadicAddress a, DyadicAddress b) {
  return contains_1d(b.x, a.x) && contains_1d(b.y, a.y);
}

namespace {

bool strictly_contains_1d(DyadicNode1D outer, DyadicNode1D inner) {
  return outer.level < inner.level && contains_1d(outer, inner);
}

}  // namespace

bool crossing(DyadicAddress a, DyadicAddress b) {
  return (strictly_contains_1d(b.x, a.x) && strictly_contains_1d(a.y, b.y)) ||
         (strictly_contains_1d(a.x, b.x) && strictly_contains_1d(b.y, a.y));
}

UnifiedSegmentTree::UnifiedSegmentTree(std::vector<Rect> rects) {
  coords_ = build_coordinate_map(rects);
  for (const Rect& r : rects) {
    rects_.emplace(r.id, r);
    write_rect(r);
  }
}

void UnifiedSegmentTree::insert(const Rect& rect) {
  validate(rect);
  if (rects_.contains(rect.id))
    throw DuplicateId("duplicate rect id " + std::to_string(rect.id));
  // Resolve ranks before mutating anything.
  coords_.rank_interval(Axis::X, rect.min_x, rect.max_x);
  coords_.rank_interval(Axis::Y, rect.min_y, rect.max_y);
  rects_.emplace(rect.id, rect);
  write_rect(rect);
}

UnifiedSegmentTree::AxisCover UnifiedSegmentTree::axis_cover(Axis axis, std::int64_t lo,
                                                             std::int64_t hi) const {
  AxisCover out;
  const RankInterval ranks = coords_.rank_interval(axis, lo, hi);
  out.cover = canonical_cover_1d(ranks, coords_.levels(axis));
  std::vector<DyadicNode1D> closure = out.cover;
  for (const DyadicNode1D& c : out.cover) {
    const auto anc = ancestors_1d(c);
    closure.insert(closure.end(), anc.begin(), anc.end());
  }
  std::sort(closure.begin(), closure.end());
  closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
  out.closure.reserve(closure.size());
  // The cover is in positional order, not (level, index) order; it is
  // small enough that a linear membership scan is fine.
  for (const DyadicNode1D& node : closure) {
    const bool in_cover = std::find(out.cover.begin(), out.cover.end(), node) != out.cover.end();
    out.closure.emplace_back(node, in_cover);
  }
  return out;
}

namespace {

// All appends of one id happen within a single insert, so checking the
// tail is enough to keep the lists duplicate-free.
void append_id(std::vector<std::int64_t>& list, std::int64_t id) {
  if (list.empty() || list.back() != id) list.push_back(id);
}

}  // namespace

void UnifiedSegmentTree::write_rect(const Rect& rect) {
  const AxisCover ax = axis_cover(Axis::X, rect.min_x, rect.max_x);
  const AxisCover ay = axis_cover(Axis::Y, rect.min_y, rect.max_y);
  // The product of the two closures is exactly the canonical pieces plus
  // all of their strict ancestors. A node above the cover on one axis and
  // on a cover member on the other is a pure x- or y-ancestor of a piece.
  for (const auto& [xn, x_in_cover] : ax.closure) {
    for (const auto& [yn, y_in_cover] : ay.closure) {
      NodeRecord& rec = nodes_[DyadicAddress{xn, yn}];
      if (x_in_cover && y_in_cover) {
        append_id(rec.stored_here, rect.id);
      } else {
        append_id(rec.stored_in_descendants, rect.id);
        if (!x_in_cover && y_in_cover) append_id(rec.stored_in_x_descendants, rect.id);
        if (x_in_cover && !y_in_cover) append_id(rec.stored_in_y_descendants, rect.id);
      }
    }
  }
}

std::vector<DyadicAddress> UnifiedSegmentTree::canonical_pieces(const Rect& rect) const {
  const RankInterval xr = coords_.rank_interval(Axis::X, rect.min_x, rect.max_x);
  const RankInterval yr = coords_.rank_interval(Axis::Y, rect.min_y, rect.max_y);
  const auto cover_x = canonical_cover_1d(xr, coords_.levels(Axis::X));
  const auto cover_y = canonical_cover_1d(yr, coords_.levels(Axis::Y));
  std::vector<DyadicAddress> out;
  out.reserve(cover_x.size() * cover_y.size());
  for (const DyadicNode1D& xn : cover_x)
    for (const DyadicNode1D& yn : cover_y) out.push_back({xn, yn});
  return out;
}

std::vector<std::int64_t> UnifiedSegmentTree::stab(Point p) const {
  const auto sx = coords_.slab_of(Axis::X, p.x);
  const auto sy = coords_.slab_of(Axis::Y, p.y);
  std::vector<std::int64_t> out;
  if (!sx || !sy) return out;
  const std::uint32_t lx = coords_.levels(Axis::X);
  const std::uint32_t ly = coords_.levels(Axis::Y);
  for (std::uint32_t a = 0; a <= lx; ++a) {
    for (std::uint32_t b = 0; b <= ly; ++b) {
      const DyadicAddress addr{{a, *sx >> (lx - a)}, {b, *sy >> (ly - b)}};
      if (const NodeRecord* rec = find_record(addr))
        out.insert(out.end(), rec->stored_here.begin(), rec->stored_here.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> UnifiedSegmentTree::intersect_query(const Rect& query) const {
  if (query.min_x >= query.max_x || query.min_y >= query.max_y)
    throw InvalidRect("degenerate query rect");
  std::vector<std::int64_t> out;
  if (rects_.empty()) return out;
  const AxisCover ax = axis_cover(Axis::X, query.min_x, query.max_x);
  const AxisCover ay = axis_cover(Axis::Y, query.min_y, query.max_y);
  for (const auto& [xn, x_in_cover] : ax.closure) {
    for (const auto& [yn, y_in_cover] : ay.closure) {
      const NodeRecord* rec = find_record({xn, yn});
      if (!rec) continue;
      // Ancestor-or-self of some piece: anything stored here contains it.
      out.insert(out.end(), rec->stored_here.begin(), rec->stored_here.end());
      if (x_in_cover && y_in_cover)
        out.insert(out.end(), rec->stored_in_descendants.begin(),
                   rec->stored_in_descendants.end());
      // Strict y-ancestor of a piece: x-descendants cross the query.
      if (x_in_cover && !y_in_cover)
        out.insert(out.end(), rec->stored_in_x_descendants.begin(),
                   rec->stored_in_x_descendants.end());
      if (!x_in_cover && y_in_cover)
        out.insert(out.end(), rec->stored_in_y_descendants.begin(),
                   rec->stored_in_y_descendants.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TreeStats UnifiedSegmentTree::stats() const {
  TreeStats s;
  s.nodes = nodes_.size();
  const std::uint32_t lx = coords_.levels(Axis::X);
  const std::uint32_t ly = coords_.levels(Axis::Y);
  std::vector<UnitStats> grid((lx + 1) * (ly + 1));
  for (std::uint32_t a = 0; a <= lx; ++a)
    for (std::uint32_t b = 0; b <= ly; ++b) grid[a * (ly + 1) + b] = {a, b, 0, 0};
  for (const auto& [addr, rec] : nodes_) {
    UnitStats& u = grid[addr.x.level * (ly + 1) + addr.y.level];
    u.nodes += 1;
    u.stored += rec.stored_here.size();
  }
  s.units = std::move(grid);
  for (const auto& [id, rect] : rects_) {
    const AxisCover ax = axis_cover(Axis::X, rect.min_x, rect.max_x);
    const AxisCover ay = axis_cover(Axis::Y, rect.min_y, rect.max_y);
    const std::uint64_t pieces = ax.cover.size() * ay.cover.size();
    const std::uint64_t closure = ax.closure.size() * ay.closure.size();
    s.max_pieces = std::max(s.max_pieces, pieces);
    s.max_ancestors = std::max(s.max_ancestors, closure - pieces);
  }
  return s;
}

std::vector<DyadicAddress> UnifiedSegmentTree::quadtree_view() const {
  std::vector<DyadicAddress> out;
  for (const auto& [addr, rec] : nodes_)
    if (addr.x.level == addr.y.level) out.push_back(addr);
  std::sort(out.begin(), out.end());
  return out;
}

const NodeRecord* UnifiedSegmentTree::find_record(DyadicAddress addr) const {
  auto it = nodes_.find(addr);
  return it == nodes_.end() ? nullptr : &it->second;
}

std::vector<DyadicAddress> UnifiedSegmentTree::addresses() const {
  std::vector<DyadicAddress> out;
  out.reserve(nodes_.size());
  for (const auto& [addr, rec] : nodes_) out.push_back(addr);
  std::sort(out.begin(), out.end());
  return out;
}

void UnifiedSegmentTree::strip_id(std::int64_t id) {
  for (auto& [addr, rec] : nodes_) {
    std::erase(rec.stored_here, id);
    std::erase(rec.stored_in_descendants, id);
    std::erase(rec.stored_in_x_descendants, id);
    std::erase(rec.stored_in_y_descendants, id);
  }
}

}  // namespace ust
