#include "ust/selfcheck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ust/oracle.hpp"

namespace ust {

namespace {

// Spread grid values out and shift them negative so slab widths are not 1
// and negative coordinates get exercised.
constexpr std::int64_t kStride = 5;
constexpr std::int64_t kOffset = -20;

std::int64_t to_coord(std::int64_t grid_value) { return grid_value * kStride + kOffset; }

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::string format_ids(const std::vector<std::int64_t>& ids) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  os << ']';
  return os.str();
}

std::string format_addr(const DyadicAddress& a) {
  std::ostringstream os;
  os << '(' << a.x.level << ',' << a.x.index << ',' << a.y.level << ',' << a.y.index << ')';
  return os.str();
}

}  // namespace

std::mt19937_64 instance_rng(std::uint64_t seed, int instance_index) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(instance_index)};
  return std::mt19937_64(seq);
}

std::vector<Rect> random_rects(std::mt19937_64& rng, int n, int grid) {
  std::vector<Rect> rects;
  rects.reserve(n);
  const auto pick_span = [&](std::int64_t& lo, std::int64_t& hi) {
    std::uint64_t a = bounded(rng, grid);
    std::uint64_t b = bounded(rng, grid);
    while (b == a) b = bounded(rng, grid);
    lo = to_coord(std::min(a, b));
    hi = to_coord(std::max(a, b));
  };
  for (int i = 0; i < n; ++i) {
    Rect r;
    r.id = i;
    pick_span(r.min_x, r.max_x);
    pick_span(r.min_y, r.max_y);
    rects.push_back(r);
  }
  return rects;
}

Point random_probe(std::mt19937_64& rng, int grid) {
  // Grid value in [-1, grid] lands on endpoints and outside the grid;
  // jitter within one stride hits slab interiors.
  const std::int64_t vx = static_cast<std::int64_t>(bounded(rng, grid + 2)) - 1;
  const std::int64_t vy = static_cast<std::int64_t>(bounded(rng, grid + 2)) - 1;
  const std::int64_t jx = static_cast<std::int64_t>(bounded(rng, kStride)) - kStride / 2;
  const std::int64_t jy = static_cast<std::int64_t>(bounded(rng, kStride)) - kStride / 2;
  return {to_coord(vx) + jx, to_coord(vy) + jy};
}

std::string format_instance(std::span<const Rect> rects) {
  std::ostringstream os;
  os << "id,minx,miny,maxx,maxy\n";
  for (const Rect& r : rects)
    os << r.id << ',' << r.min_x << ',' << r.min_y << ',' << r.max_x << ',' << r.max_y << '\n';
  return os.str();
}

std::optional<std::string> check_structure(const UnifiedSegmentTree& tree) {
  struct Expected {
    std::set<std::int64_t> here, desc, x_desc, y_desc;
  };
  std::map<DyadicAddress, Expected> expected;
  const CoordinateMap& cm = tree.coords();
  for (const auto& [id, rect] : tree.rects()) {
    const auto pieces = tree.canonical_pieces(rect);
    for (const DyadicAddress& piece : pieces) {
      expected[piece].here.insert(id);
      for (const DyadicAddress& anc : ancestors(piece, false)) expected[anc].desc.insert(id);
      for (const DyadicNode1D& xa : ancestors_1d(piece.x))
        expected[DyadicAddress{xa, piece.y}].x_desc.insert(id);
      for (const DyadicNode1D& ya : ancestors_1d(piece.y))
        expected[DyadicAddress{piece.x, ya}].y_desc.insert(id);
    }
  }

  const auto actual_addrs = tree.addresses();
  if (actual_addrs.size() != expected.size())
    return "node store holds " + std::to_string(actual_addrs.size()) + " addresses, expected " +
           std::to_string(expected.size());
  const auto mismatch = [](const std::vector<std::int64_t>& got,
                           const std::set<std::int64_t>& want) {
    std::vector<std::int64_t> sorted = got;
    std::sort(sorted.begin(), sorted.end());
    return !std::equal(sorted.begin(), sorted.end(), want.begin(), want.end());
  };
  for (const DyadicAddress& addr : actual_addrs) {
    const auto it = expected.find(addr);
    if (it == expected.end())
      return "unexpected node " + format_addr(addr) + " in the store";
    if (addr.x.index >= (std::uint64_t{1} << addr.x.level) ||
        addr.y.index >= (std::uint64_t{1} << addr.y.level) ||
        addr.x.level > cm.levels(Axis::X) || addr.y.level > cm.levels(Axis::Y))
      return "node " + format_addr(addr) + " lies outside the padded universe";
    const NodeRecord& rec = *tree.find_record(addr);
    if (mismatch(rec.stored_here, it->second.here) ||
        mismatch(rec.stored_in_descendants, it->second.desc) ||
        mismatch(rec.stored_in_x_descendants, it->second.x_desc) ||
        mismatch(rec.stored_in_y_descendants, it->second.y_desc))
      return "node " + format_addr(addr) + " lists differ from the per-piece reconstruction";
    const auto subset = [](const std::vector<std::int64_t>& sub,
                           const std::vector<std::int64_t>& super) {
      std::set<std::int64_t> s(super.begin(), super.end());
      return std::all_of(sub.begin(), sub.end(),
                         [&](std::int64_t id) { return s.contains(id); });
    };
    if (!subset(rec.stored_in_x_descendants, rec.stored_in_descendants) ||
        !subset(rec.stored_in_y_descendants, rec.stored_in_descendants))
      return "node " + format_addr(addr) + " violates the descendant-list subset invariant";
  }
  return std::nullopt;
}

std::optional<std::string> check_ancestor_bounds(const UnifiedSegmentTree& tree) {
  const CoordinateMap& cm = tree.coords();
  const auto axis_bound = [](std::uint64_t levels) {
    return std::max<std::uint64_t>(1, 2 * levels);
  };
  const std::uint64_t piece_bound =
      axis_bound(cm.levels(Axis::X)) * axis_bound(cm.levels(Axis::Y));
  for (const auto& [id, rect] : tree.rects()) {
    const auto pieces = tree.canonical_pieces(rect);
    if (pieces.size() > piece_bound)
      return "rect " + std::to_string(id) + " has " + std::to_string(pieces.size()) +
             " pieces, above the bound " + std::to_string(piece_bound);
    std::set<DyadicAddress> strict;
    for (const DyadicAddress& piece : pieces)
      for (const DyadicAddress& anc : ancestors(piece, false)) strict.insert(anc);
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> per_unit;
    for (const DyadicAddress& anc : strict)
      if (++per_unit[{anc.x.level, anc.y.level}] > 16)
        return "rect " + std::to_string(id) + " has more than 16 ancestors in unit (" +
               std::to_string(anc.x.level) + "," + std::to_string(anc.y.level) + ")";
  }
  return std::nullopt;
}

std::optional<std::string> check_cover_exactness(const UnifiedSegmentTree& tree) {
  const CoordinateMap& cm = tree.coords();
  const std::uint32_t lx = cm.levels(Axis::X);
  const std::uint32_t ly = cm.levels(Axis::Y);
  for (const auto& [id, rect] : tree.rects()) {
    const RankInterval xr = cm.rank_interval(Axis::X, rect.min_x, rect.max_x);
    const RankInterval yr = cm.rank_interval(Axis::Y, rect.min_y, rect.max_y);
    const auto cover_x = canonical_cover_1d(xr, lx);
    const auto cover_y = canonical_cover_1d(yr, ly);
    std::vector<DyadicAddress> x_first, y_first;
    for (const DyadicNode1D& xn : cover_x)
      for (const DyadicNode1D& yn : cover_y) x_first.push_back({xn, yn});
    for (const DyadicNode1D& yn : cover_y)
      for (const DyadicNode1D& xn : cover_x) y_first.push_back({xn, yn});
    std::sort(x_first.begin(), x_first.end());
    std::sort(y_first.begin(), y_first.end());
    if (x_first != y_first)
      return "rect " + std::to_string(id) + ": x-first and y-first piece sets differ";
    if (x_first != [&] {
          auto p = tree.canonical_pieces(rect);
          std::sort(p.begin(), p.end());
          return p;
        }())
      return "rect " + std::to_string(id) + ": canonical_pieces disagrees with the raw product";
    if (!oracle_cover_check(x_first, xr, yr, lx, ly))
      return "rect " + std::to_string(id) + ": pieces do not tile the rank region exactly";
  }
  return std::nullopt;
}

SelfcheckReport run_selfcheck(const SelfcheckParams& params) {
  SelfcheckReport report;
  const auto fail = [&](int instance, std::span<const Rect> rects, const std::string& what) {
    report.passed = false;
    std::ostringstream os;
    os << "instance " << instance << " (seed " << params.seed << ")\n"
       << format_instance(rects) << what;
    report.counterexample = os.str();
  };
  for (int i = 0; i < params.instances && report.passed; ++i) {
    std::mt19937_64 rng = instance_rng(params.seed, i);
    const int grid = 2 + static_cast<int>(bounded(rng, std::max(1, params.grid - 1)));
    const int n = 1 + static_cast<int>(bounded(rng, params.max_rects));
    const std::vector<Rect> rects = random_rects(rng, n, grid);
    UnifiedSegmentTree tree(rects);
    if (params.inject_fault) tree.strip_id(rects.front().id);
    report.instances_run += 1;

    for (const Rect& q : rects) {
      const auto got = tree.intersect_query(q);
      const auto want = oracle_intersect(rects, q);
      report.intersect_checks += 1;
      if (got != want) {
        fail(i, rects,
             "intersect_query(" + std::to_string(q.min_x) + "," + std::to_string(q.min_y) + "," +
                 std::to_string(q.max_x) + "," + std::to_string(q.max_y) + ") = " +
                 format_ids(got) + ", oracle says " + format_ids(want));
        break;
      }
    }
    if (!report.passed) break;

    for (int k = 0; k < params.stab_points; ++k) {
      const Point p = random_probe(rng, grid);
      const auto got = tree.stab(p);
      const auto want = oracle_stab(rects, p);
      report.stab_checks += 1;
      if (got != want) {
        fail(i, rects,
             "stab(" + std::to_string(p.x) + "," + std::to_string(p.y) + ") = " +
                 format_ids(got) + ", oracle says " + format_ids(want));
        break;
      }
    }
    if (!report.passed) break;

    for (const auto& checker : {check_structure, check_ancestor_bounds, check_cover_exactness}) {
      report.invariant_checks += 1;
      if (const auto violation = checker(tree)) {
        fail(i, rects, *violation);
        break;
      }
    }
  }
  return report;
}

}  // namespace ust
