#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ust/geometry.hpp"
#include "ust/tree.hpp"

namespace ust {

// Randomized end-to-end verification: small instances are generated from a
// seed, indexed and replayed against the brute-force oracles, and the
// structural invariants of the node store are checked directly. Everything
// is deterministic for a fixed seed.

struct SelfcheckParams {
  std::uint64_t seed = 1;
  int instances = 200;
  int max_rects = 64;   // n is drawn from [1, max_rects]
  int grid = 12;        // at most this many distinct endpoint values per axis
  int stab_points = 50;
  bool inject_fault = false;  // strip one id after each build; must fail
};

struct SelfcheckReport {
  int instances_run = 0;
  std::int64_t intersect_checks = 0;
  std::int64_t stab_checks = 0;
  std::int64_t invariant_checks = 0;
  bool passed = true;
  // Reproduction data for the first failure: the instance as CSV lines
  // plus the failing query or violated invariant.
  std::string counterexample;
};

// Deterministic rng for one instance of a seeded stream.
std::mt19937_64 instance_rng(std::uint64_t seed, int instance_index);

// n rects with coordinates drawn from `grid` distinct values per axis
// (small grids give heavy endpoint sharing). Ids are 0..n-1.
std::vector<Rect> random_rects(std::mt19937_64& rng, int n, int grid);

// Probe point for stabbing: on a gridline, strictly inside a slab, or
// outside the grid entirely.
Point random_probe(std::mt19937_64& rng, int grid);

// Each checker returns a description of the first violation, or nothing.

// Rebuilds the expected node store by enumerating every piece's ancestors
// one by one and compares it with the actual store: same addresses, same
// list contents, subset invariants, all addresses inside the universe.
std::optional<std::string> check_structure(const UnifiedSegmentTree& tree);

// Per stored rect: strict ancestors of the canonical pieces number at
// most 16 per unit, and the piece count is within the per-axis cover
// bound max(1, 2*levels) squared.
std::optional<std::string> check_ancestor_bounds(const UnifiedSegmentTree& tree);

// Per stored rect: x-first and y-first piece products agree, and the
// pieces tile the rect's rank region exactly (cell-by-cell).
std::optional<std::string> check_cover_exactness(const UnifiedSegmentTree& tree);

SelfcheckReport run_selfcheck(const SelfcheckParams& params);

// CSV-style dump used in counterexamples.
std::string format_instance(std::span<const Rect> rects);

}  // namespace ust
