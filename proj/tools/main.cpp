#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ust/csv.hpp"
#include "ust/selfcheck.hpp"
#include "ust/svg.hpp"
#include "ust/tree.hpp"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInvariantViolation = 2;

double elapsed_micros(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

ust::UnifiedSegmentTree build_from_csv(const std::string& path) {
  ust::Dataset ds = ust::load_csv(path);
  return ust::UnifiedSegmentTree(std::move(ds.rects));
}

json stats_json(const ust::UnifiedSegmentTree& tree) {
  const ust::TreeStats stats = tree.stats();
  json units = json::array();
  for (const ust::UnitStats& u : stats.units)
    units.push_back({{"a", u.x_level}, {"b", u.y_level}, {"nodes", u.nodes}, {"stored", u.stored}});
  return {{"nodes", stats.nodes},
          {"units", std::move(units)},
          {"max_ancestors", stats.max_ancestors},
          {"max_pieces", stats.max_pieces}};
}

int cmd_stats(const std::string& input) {
  const auto tree = build_from_csv(input);
  std::cout << stats_json(tree).dump() << "\n";
  return kExitOk;
}

int cmd_stab(const std::string& input, std::int64_t x, std::int64_t y) {
  const auto tree = build_from_csv(input);
  const auto start = Clock::now();
  const auto ids = tree.stab({x, y});
  const double micros = elapsed_micros(start);
  const json result = {{"query", {{"x", x}, {"y", y}}},
                       {"ids", ids},
                       {"count", ids.size()},
                       {"micros", micros}};
  std::cout << result.dump() << "\n";
  return kExitOk;
}

// Snap expands the query outward to registered endpoints; the exact
// overlap filter against the original query keeps the answer set intact.
int cmd_rectq(const std::string& input, ust::Rect q, bool snap) {
  const auto tree = build_from_csv(input);
  if (q.min_x >= q.max_x || q.min_y >= q.max_y) throw ust::Error("degenerate query rectangle");
  std::vector<std::int64_t> ids;
  ust::Rect effective = q;
  const auto start = Clock::now();
  if (snap) {
    const auto snap_axis = [&](ust::Axis axis, std::int64_t& lo, std::int64_t& hi) -> bool {
      const auto& e = tree.coords().endpoints(axis);
      if (e.size() < 2) return false;
      const auto lo_it = std::upper_bound(e.begin(), e.end(), lo);
      lo = lo_it == e.begin() ? e.front() : *(lo_it - 1);
      const auto hi_it = std::lower_bound(e.begin(), e.end(), hi);
      hi = hi_it == e.end() ? e.back() : *hi_it;
      return lo < hi;
    };
    if (snap_axis(ust::Axis::X, effective.min_x, effective.max_x) &&
        snap_axis(ust::Axis::Y, effective.min_y, effective.max_y)) {
      for (std::int64_t id : tree.intersect_query(effective)) {
        if (ust::rects_overlap(tree.rects().at(id), q)) ids.push_back(id);
      }
    }
  } else {
    ids = tree.intersect_query(q);
  }
  const double micros = elapsed_micros(start);
  const json result = {{"query",
                        {{"minx", effective.min_x},
                         {"miny", effective.min_y},
                         {"maxx", effective.max_x},
                         {"maxy", effective.max_y}}},
                       {"ids", ids},
                       {"count", ids.size()},
                       {"micros", micros}};
  std::cout << result.dump() << "\n";
  return kExitOk;
}

int cmd_selfcheck(const ust::SelfcheckParams& params) {
  const ust::SelfcheckReport report = ust::run_selfcheck(params);
  json out = {{"passed", report.passed},
              {"instances", report.instances_run},
              {"intersect_checks", report.intersect_checks},
              {"stab_checks", report.stab_checks},
              {"invariant_checks", report.invariant_checks},
              {"seed", params.seed}};
  if (!report.passed) out["counterexample"] = report.counterexample;
  std::cout << out.dump() << "\n";
  return report.passed ? kExitOk : kExitInvariantViolation;
}

int cmd_render(const std::string& input, const std::string& out_path) {
  const auto tree = build_from_csv(input);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ust::Error("cannot open '" + out_path + "' for writing");
  out << ust::render_diamond_svg(tree);
  if (!out.good()) throw ust::Error("failed writing '" + out_path + "'");
  return kExitOk;
}

int cmd_bench(const std::string& input, int queries, std::uint64_t seed) {
  ust::Dataset ds = ust::load_csv(input);
  const std::size_t n = ds.rects.size();
  const auto build_start = Clock::now();
  ust::UnifiedSegmentTree tree(std::move(ds.rects));
  const double build_micros = elapsed_micros(build_start);

  const auto& coords = tree.coords();
  const auto& xe = coords.endpoints(ust::Axis::X);
  const auto& ye = coords.endpoints(ust::Axis::Y);
  std::mt19937_64 rng(seed);
  std::uint64_t checksum = 0xcbf29ce484222325ULL;  // FNV-1a over query coordinates
  const auto mix = [&checksum](std::int64_t v) {
    checksum ^= static_cast<std::uint64_t>(v);
    checksum *= 0x100000001b3ULL;
  };
  const auto pick_span = [&rng](const std::vector<std::int64_t>& e, std::int64_t& lo,
                                std::int64_t& hi) {
    std::size_t a = rng() % e.size();
    std::size_t b = rng() % e.size();
    while (b == a) b = rng() % e.size();
    lo = e[std::min(a, b)];
    hi = e[std::max(a, b)];
  };

  std::vector<ust::Point> stab_queries;
  std::vector<ust::Rect> rect_queries;
  if (xe.size() >= 2 && ye.size() >= 2) {
    std::uniform_int_distribution<std::int64_t> dx(xe.front(), xe.back());
    std::uniform_int_distribution<std::int64_t> dy(ye.front(), ye.back());
    for (int i = 0; i < queries; ++i) {
      stab_queries.push_back({dx(rng), dy(rng)});
      mix(stab_queries.back().x);
      mix(stab_queries.back().y);
    }
    for (int i = 0; i < queries; ++i) {
      ust::Rect q;
      q.id = 0;
      pick_span(xe, q.min_x, q.max_x);
      pick_span(ye, q.min_y, q.max_y);
      rect_queries.push_back(q);
      mix(q.min_x);
      mix(q.min_y);
      mix(q.max_x);
      mix(q.max_y);
    }
  }

  const auto run_timed = [](auto&& fn, std::vector<double>& micros) {
    const auto start = Clock::now();
    fn();
    micros.push_back(elapsed_micros(start));
  };
  const auto summarize = [](std::vector<double> micros) -> std::pair<double, double> {
    if (micros.empty()) return {0.0, 0.0};
    double sum = 0;
    for (double m : micros) sum += m;
    std::sort(micros.begin(), micros.end());
    const std::size_t p99 =
        std::min(micros.size() - 1, static_cast<std::size_t>(micros.size() * 99 / 100));
    return {sum / micros.size(), micros[p99]};
  };

  std::vector<double> stab_micros, rectq_micros;
  std::size_t hits = 0;
  for (const ust::Point& p : stab_queries)
    run_timed([&] { hits += tree.stab(p).size(); }, stab_micros);
  for (const ust::Rect& q : rect_queries)
    run_timed([&] { hits += tree.intersect_query(q).size(); }, rectq_micros);

  const auto [stab_mean, stab_p99] = summarize(stab_micros);
  const auto [rectq_mean, rectq_p99] = summarize(rectq_micros);
  const json out = {{"n", n},
                    {"nodes", tree.node_count()},
                    {"x_levels", coords.levels(ust::Axis::X)},
                    {"y_levels", coords.levels(ust::Axis::Y)},
                    {"build_micros", build_micros},
                    {"queries", queries},
                    {"stab_mean_micros", stab_mean},
                    {"stab_p99_micros", stab_p99},
                    {"rectq_mean_micros", rectq_mean},
                    {"rectq_p99_micros", rectq_p99},
                    {"result_ids", hits},
                    {"checksum", checksum},
                    {"seed", seed}};
  std::cout << out.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D unified segment tree: rectangle stabbing and intersection queries"};
  app.require_subcommand(1);

  std::string input, out_path;
  std::int64_t px = 0, py = 0;
  ust::Rect query;
  bool snap = false;
  ust::SelfcheckParams params;
  int queries = 200;
  std::uint64_t bench_seed = 1;

  auto* stats = app.add_subcommand("stats", "Structural report for a dataset");
  stats->add_option("--input", input, "CSV dataset")->required();

  auto* stab = app.add_subcommand("stab", "Report all rectangles containing a point");
  stab->add_option("--input", input, "CSV dataset")->required();
  stab->add_option("--x", px, "Point x")->required();
  stab->add_option("--y", py, "Point y")->required();

  auto* rectq = app.add_subcommand("rectq", "Report all rectangles intersecting a query rectangle");
  rectq->add_option("--input", input, "CSV dataset")->required();
  rectq->add_option("--minx", query.min_x, "Query min x")->required();
  rectq->add_option("--miny", query.min_y, "Query min y")->required();
  rectq->add_option("--maxx", query.max_x, "Query max x")->required();
  rectq->add_option("--maxy", query.max_y, "Query max y")->required();
  rectq->add_flag("--snap", snap, "Snap query edges outward to registered endpoints");

  auto* selfcheck = app.add_subcommand("selfcheck", "Randomized verification against the oracle");
  selfcheck->add_option("--seed", params.seed, "Random seed");
  selfcheck->add_option("--instances", params.instances, "Number of random instances")
      ->check(CLI::NonNegativeNumber);
  selfcheck->add_option("--max-n", params.max_rects, "Max rectangles per instance")
      ->check(CLI::PositiveNumber);
  selfcheck->add_option("--grid", params.grid, "Max distinct endpoint values per axis")
      ->check(CLI::Range(2, 1 << 20));
  selfcheck->add_flag("--corrupt", params.inject_fault,
                      "Fault injection: drop one stored id after each build (must fail)");

  auto* render = app.add_subcommand("render", "Write the diamond visualization as SVG");
  render->add_option("--input", input, "CSV dataset")->required();
  render->add_option("--out", out_path, "Output SVG path")->required();

  auto* bench = app.add_subcommand("bench", "Micro-benchmark build and query latency");
  bench->add_option("--input", input, "CSV dataset")->required();
  bench->add_option("--queries", queries, "Queries per kind")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "Random seed for query generation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (stats->parsed()) return cmd_stats(input);
    if (stab->parsed()) return cmd_stab(input, px, py);
    if (rectq->parsed()) return cmd_rectq(input, query, snap);
    if (selfcheck->parsed()) return cmd_selfcheck(params);
    if (render->parsed()) return cmd_render(input, out_path);
    if (bench->parsed()) return cmd_bench(input, queries, bench_seed);
  } catch (const ust::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariantViolation;
  }
  return kExitInputError;
}
