#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ust/oracle.hpp"
#include "ust/seg1d.hpp"

using namespace ust;

namespace {

// minx/maxx 10 apart per step so every boundary case is visible by eye.
const std::vector<Rect> kNested = {
    {0, 0, 0, 50, 50}, {1, 10, 10, 40, 40}, {2, 20, 20, 30, 30},
    {3, 0, 0, 10, 10},  {4, 40, 0, 50, 10},
};

}  // namespace

TEST_CASE("oracle_stab honors the half-open rule") {
  CHECK(oracle_stab(kNested, {25, 25}) == std::vector<std::int64_t>{0, 1, 2});
  CHECK(oracle_stab(kNested, {0, 0}) == std::vector<std::int64_t>{0, 3});
  CHECK(oracle_stab(kNested, {10, 10}) == std::vector<std::int64_t>{0, 1});  // left edge in
  CHECK(oracle_stab(kNested, {30, 30}) == std::vector<std::int64_t>{0, 1});  // right edge out
  CHECK(oracle_stab(kNested, {50, 25}).empty());
  CHECK(oracle_stab(kNested, {-1, 25}).empty());
  CHECK(oracle_stab(kNested, {49, 9}) == std::vector<std::int64_t>{0, 4});
}

TEST_CASE("oracle_intersect requires positive-area overlap") {
  CHECK(oracle_intersect(kNested, {9, 20, 20, 30, 30}) == std::vector<std::int64_t>{0, 1, 2});
  CHECK(oracle_intersect(kNested, {9, 0, 0, 50, 50}) == std::vector<std::int64_t>{0, 1, 2, 3, 4});
  // Query touching rect 2 only along its edge excludes it.
  CHECK(oracle_intersect(kNested, {9, 30, 20, 40, 30}) == std::vector<std::int64_t>{0, 1});
  CHECK(oracle_intersect(kNested, {9, 50, 0, 60, 50}).empty());
  CHECK(oracle_intersect(kNested, {9, 5, 5, 15, 15}) == std::vector<std::int64_t>{0, 1, 3});
}

TEST_CASE("oracle answers are order-invariant") {
  std::vector<Rect> shuffled = kNested;
  std::mt19937_64 rng(3);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(oracle_stab(shuffled, {25, 25}) == oracle_stab(kNested, {25, 25}));
    CHECK(oracle_intersect(shuffled, {9, 5, 5, 15, 15}) ==
          oracle_intersect(kNested, {9, 5, 5, 15, 15}));
  }
}

TEST_CASE("oracle_cover_check accepts exact tilings only") {
  // Cover of x-[1,3) x y-[0,1) in a 4x2 rank universe.
  const RankInterval xr{1, 3}, yr{0, 1};
  std::vector<DyadicAddress> pieces;
  for (const DyadicNode1D& xn : canonical_cover_1d(xr, 2))
    for (const DyadicNode1D& yn : canonical_cover_1d(yr, 1)) pieces.push_back({xn, yn});
  REQUIRE(pieces.size() == 2);
  CHECK(oracle_cover_check(pieces, xr, yr, 2, 1));

  // A gap, a leak, and a double cover each fail.
  std::vector<DyadicAddress> gap(pieces.begin(), pieces.begin() + 1);
  CHECK_FALSE(oracle_cover_check(gap, xr, yr, 2, 1));
  std::vector<DyadicAddress> leak = pieces;
  leak.push_back({{2, 3}, {1, 0}});  // x-slab 3 is outside [1,3)
  CHECK_FALSE(oracle_cover_check(leak, xr, yr, 2, 1));
  std::vector<DyadicAddress> doubled = pieces;
  doubled.push_back(pieces.front());
  CHECK_FALSE(oracle_cover_check(doubled, xr, yr, 2, 1));
  // A coarser node covering the same cells from outside the region fails
  // the leak test even though it contains every target cell.
  CHECK_FALSE(oracle_cover_check(std::vector<DyadicAddress>{{{0, 0}, {0, 0}}}, xr, yr, 2, 1));
}

TEST_CASE("oracle_cover_check rejects empty regions") {
  CHECK_FALSE(oracle_cover_check({}, {2, 2}, {0, 1}, 2, 1));
  CHECK_FALSE(oracle_cover_check({}, {0, 1}, {1, 1}, 2, 1));
}
