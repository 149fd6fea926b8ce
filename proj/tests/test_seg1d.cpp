#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

#include "ust/seg1d.hpp"

using namespace ust;

namespace {

// Independent reference: repeatedly take the largest aligned dyadic block
// starting at lo that fits in [lo, hi). Greedy-from-the-left produces the
// same maximal disjoint tiling as midpoint descent but shares no code with it.
std::vector<DyadicNode1D> greedy_cover(std::uint64_t lo, std::uint64_t hi, std::uint32_t levels) {
  std::vector<DyadicNode1D> out;
  while (lo < hi) {
    std::uint64_t size = std::uint64_t{1} << levels;
    while (size > hi - lo || lo % size != 0) size >>= 1;
    const auto drop = static_cast<std::uint32_t>(std::countr_zero(size));
    out.push_back({levels - drop, lo >> drop});
    lo += size;
  }
  return out;
}

}  // namespace

TEST_CASE("interval_of maps addresses to rank ranges") {
  CHECK(interval_of({0, 0}, 3) == RankInterval{0, 8});
  CHECK(interval_of({1, 1}, 3) == RankInterval{4, 8});
  CHECK(interval_of({2, 1}, 3) == RankInterval{2, 4});
  CHECK(interval_of({3, 5}, 3) == RankInterval{5, 6});
  CHECK(interval_of({0, 0}, 0) == RankInterval{0, 1});
}

TEST_CASE("contains_1d is dyadic ancestry") {
  CHECK(contains_1d({1, 0}, {1, 0}));  // reflexive
  CHECK(contains_1d({0, 0}, {3, 7}));
  CHECK(contains_1d({1, 0}, {2, 1}));
  CHECK_FALSE(contains_1d({1, 0}, {2, 2}));
  CHECK_FALSE(contains_1d({2, 1}, {1, 0}));  // never holds upward
  CHECK_FALSE(contains_1d({1, 0}, {1, 1}));
}

TEST_CASE("canonical cover: frozen examples") {
  CHECK(canonical_cover_1d({1, 3}, 2) == std::vector<DyadicNode1D>{{2, 1}, {2, 2}});
  CHECK(canonical_cover_1d({0, 3}, 2) == std::vector<DyadicNode1D>{{1, 0}, {2, 2}});
  CHECK(canonical_cover_1d({0, 4}, 2) == std::vector<DyadicNode1D>{{0, 0}});
  CHECK(canonical_cover_1d({1, 7}, 3) ==
        std::vector<DyadicNode1D>{{3, 1}, {2, 1}, {2, 2}, {3, 6}});
  CHECK(canonical_cover_1d({0, 1}, 0) == std::vector<DyadicNode1D>{{0, 0}});
  CHECK_THROWS_AS(canonical_cover_1d({2, 2}, 3), Error);
  CHECK_THROWS_AS(canonical_cover_1d({3, 1}, 3), Error);
  CHECK_THROWS_AS(canonical_cover_1d({0, 9}, 3), Error);
}

TEST_CASE("canonical cover equals the greedy reference exhaustively") {
  for (std::uint32_t levels = 0; levels <= 7; ++levels) {
    const std::uint64_t universe = std::uint64_t{1} << levels;
    for (std::uint64_t lo = 0; lo < universe; ++lo)
      for (std::uint64_t hi = lo + 1; hi <= universe; ++hi)
        REQUIRE(canonical_cover_1d({lo, hi}, levels) == greedy_cover(lo, hi, levels));
  }
}

TEST_CASE("canonical cover: tiling, maximality and per-level width") {
  for (std::uint32_t levels = 0; levels <= 8; ++levels) {
    const std::uint64_t universe = std::uint64_t{1} << levels;
    for (std::uint64_t lo = 0; lo < universe; ++lo) {
      for (std::uint64_t hi = lo + 1; hi <= universe; ++hi) {
        const auto cover = canonical_cover_1d({lo, hi}, levels);
        // Left-to-right members tile [lo, hi) without gap or overlap.
        std::uint64_t at = lo;
        std::map<std::uint32_t, int> per_level;
        for (const DyadicNode1D& node : cover) {
          const RankInterval span = interval_of(node, levels);
          REQUIRE(span.lo == at);
          at = span.hi;
          per_level[node.level] += 1;
          // Maximal: the parent would stick out of the target.
          if (node.level > 0) {
            const RankInterval parent = interval_of({node.level - 1, node.index >> 1}, levels);
            REQUIRE((parent.lo < lo || parent.hi > hi));
          }
        }
        REQUIRE(at == hi);
        for (const auto& [level, count] : per_level) REQUIRE(count <= 2);
        // Total size: 2L with a floor of one for the single-slab universe,
        // where the cover is the root alone.
        REQUIRE(cover.size() <= std::max<std::size_t>(1, 2 * levels));
      }
    }
  }
}

TEST_CASE("cover ancestors stay within four per level") {
  for (std::uint32_t levels = 0; levels <= 6; ++levels) {
    const std::uint64_t universe = std::uint64_t{1} << levels;
    for (std::uint64_t lo = 0; lo < universe; ++lo) {
      for (std::uint64_t hi = lo + 1; hi <= universe; ++hi) {
        std::vector<DyadicNode1D> ancestors;
        for (const DyadicNode1D& node : canonical_cover_1d({lo, hi}, levels)) {
          const auto anc = ancestors_1d(node);
          ancestors.insert(ancestors.end(), anc.begin(), anc.end());
        }
        std::sort(ancestors.begin(), ancestors.end());
        ancestors.erase(std::unique(ancestors.begin(), ancestors.end()), ancestors.end());
        std::map<std::uint32_t, int> per_level;
        for (const DyadicNode1D& node : ancestors) per_level[node.level] += 1;
        for (const auto& [level, count] : per_level) REQUIRE(count <= 4);
      }
    }
  }
}

TEST_CASE("ancestors_1d walks to the root, nearest first") {
  CHECK(ancestors_1d({3, 5}) == std::vector<DyadicNode1D>{{2, 2}, {1, 1}, {0, 0}});
  CHECK(ancestors_1d({1, 1}) == std::vector<DyadicNode1D>{{0, 0}});
  CHECK(ancestors_1d({0, 0}).empty());
}

TEST_CASE("stab_path_1d lists the containing node per level") {
  CHECK(stab_path_1d(5, 3) == std::vector<DyadicNode1D>{{0, 0}, {1, 1}, {2, 2}, {3, 5}});
  CHECK(stab_path_1d(0, 0) == std::vector<DyadicNode1D>{{0, 0}});
  for (std::uint32_t levels = 0; levels <= 6; ++levels) {
    for (std::uint64_t slab = 0; slab < (std::uint64_t{1} << levels); ++slab) {
      const auto path = stab_path_1d(slab, levels);
      REQUIRE(path.size() == levels + 1);
      const DyadicNode1D leaf{levels, slab};
      for (std::size_t i = 0; i < path.size(); ++i) {
        REQUIRE(path[i].level == i);
        REQUIRE(contains_1d(path[i], leaf));
      }
    }
  }
}

TEST_CASE("dyadic nodes never partially overlap") {
  // Every pair of node intervals is either disjoint or nested, exhaustively
  // over all nodes of a height-4 universe.
  const std::uint32_t levels = 4;
  std::vector<DyadicNode1D> nodes;
  for (std::uint32_t level = 0; level <= levels; ++level)
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << level); ++index)
      nodes.push_back({level, index});
  for (const DyadicNode1D& a : nodes) {
    for (const DyadicNode1D& b : nodes) {
      const RankInterval ia = interval_of(a, levels);
      const RankInterval ib = interval_of(b, levels);
      const bool intersects = std::max(ia.lo, ib.lo) < std::min(ia.hi, ib.hi);
      const bool nested = contains_1d(a, b) || contains_1d(b, a);
      REQUIRE(intersects == nested);
    }
  }
}
