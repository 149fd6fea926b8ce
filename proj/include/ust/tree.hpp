#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "ust/geometry.hpp"
#include "ust/seg1d.hpp"

namespace ust {

struct NoParent : Error {
  using Error::Error;
};
struct NoChild : Error {
  using Error::Error;
};

// One node of the unified tree: the product of a dyadic x-node and a
// dyadic y-node, representing the rank-space region x-interval x y-interval.
// Nodes with the same (x.level, y.level) share a shape and form one unit
// of the diamond visualization. The root is (0,0,0,0).
struct DyadicAddress {
  DyadicNode1D x;
  DyadicNode1D y;

  friend auto operator<=>(const DyadicAddress&, const DyadicAddress&) = default;
};

struct AddressHash {
  std::size_t operator()(const DyadicAddress& a) const noexcept {
    std::uint64_t h = (std::uint64_t{a.x.level} << 58) ^ a.x.index;
    h *= 0xff51afd7ed558ccdULL;
    h ^= ((std::uint64_t{a.y.level} << 58) ^ a.y.index) * 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    h *= 0x9e3779b97f4a7c15ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

// Per-node id lists. stored_here holds the rects whose canonical
// representation includes this node; the other three are the augmentation
// lists over the node's descendants, split by pure-x and pure-y descent.
// Both x- and y-descendant lists are subsets of stored_in_descendants.
struct NodeRecord {
  std::vector<std::int64_t> stored_here;
  std::vector<std::int64_t> stored_in_descendants;
  std::vector<std::int64_t> stored_in_x_descendants;
  std::vector<std::int64_t> stored_in_y_descendants;
};

// Address arithmetic. A node can have two parents and four children; the
// x-operations touch only the x component and vice versa, so
// x_parent(y_parent(a)) == y_parent(x_parent(a)) wherever both exist.
DyadicAddress x_parent(DyadicAddress addr);
DyadicAddress y_parent(DyadicAddress addr);
std::array<DyadicAddress, 2> x_children(DyadicAddress addr, std::uint32_t x_levels);
std::array<DyadicAddress, 2> y_children(DyadicAddress addr, std::uint32_t y_levels);

// Every node reachable by x- and/or y-parent steps: exactly one address
// per unit (a', b') with a' <= x.level and b' <= y.level. Ordered by
// ascending (x-level, y-level).
std::vector<DyadicAddress> ancestors(DyadicAddress addr, bool include_self);

// True iff region(a) is contained in region(b). Reflexive.
bool is_descendant(DyadicAddress a, DyadicAddress b);

// True iff the two regions properly cross: one spans the other's full
// x-extent, the other spans the first's full y-extent, and neither
// contains the other. Equivalently a strict x-ancestor of one node equals
// a strict y-ancestor of the other.
bool crossing(DyadicAddress a, DyadicAddress b);

struct UnitStats {
  std::uint32_t x_level = 0;
  std::uint32_t y_level = 0;
  std::uint64_t nodes = 0;
  std::uint64_t stored = 0;
};

struct TreeStats {
  std::uint64_t nodes = 0;
  // One entry per unit, all (x_levels+1)*(y_levels+1) of them, ordered by
  // (x_level, y_level).
  std::vector<UnitStats> units;
  // Largest strict-ancestor set of any stored rect's canonical pieces.
  std::uint64_t max_ancestors = 0;
  std::uint64_t max_pieces = 0;
};

// The merged xy/yx segment tree over rank space. Nodes live in an
// associative store keyed by DyadicAddress and are materialized lazily:
// exactly the canonical pieces of stored rects and their ancestors ever
// get a record, which realizes the ancestor-closure construction step for
// free. The structure is not a tree (a node can have two parents); the
// address arithmetic gives every logical node a single identity.
//
// Lifecycle: the endpoint universe is fixed by the initial rect set.
// Later inserts are accepted only if their endpoints are already
// registered. Single writer; any number of concurrent readers afterwards.
class UnifiedSegmentTree {
 public:
  UnifiedSegmentTree() = default;
  explicit UnifiedSegmentTree(std::vector<Rect> rects);

  // Endpoints must already be registered; the id must be new.
  void insert(const Rect& rect);

  // Product of the per-axis canonical covers: pairwise disjoint pieces
  // whose union is exactly the rect's rank region. The same set results
  // whether the x or the y axis is decomposed first.
  std::vector<DyadicAddress> canonical_pieces(const Rect& rect) const;

  // Ids of all stored rects containing the point (half-open), sorted.
  // Walks the (x_levels+1)*(y_levels+1) ancestors of the point's leaf cell
  // and concatenates their stored_here lists; pieces of one rect are
  // disjoint, so no id can repeat.
  std::vector<std::int64_t> stab(Point p) const;

  // Ids of all stored rects overlapping the query (positive area), sorted.
  // For each canonical piece of the query: stored_here of every
  // ancestor-or-self, the piece's descendant list, the x-descendant lists
  // of its strict y-ancestors and the y-descendant lists of its strict
  // x-ancestors. The query's endpoints must be registered.
  std::vector<std::int64_t> intersect_query(const Rect& query) const;

  TreeStats stats() const;

  // Materialized addresses on the square diagonal (x.level == y.level),
  // sorted. These nodes form a quad tree: the x-parent's y-parent of each
  // non-root member is its quad-tree parent.
  std::vector<DyadicAddress> quadtree_view() const;

  const CoordinateMap& coords() const { return coords_; }
  const std::map<std::int64_t, Rect>& rects() const { return rects_; }
  std::size_t node_count() const { return nodes_.size(); }
  // nullptr when the address was never materialized.
  const NodeRecord* find_record(DyadicAddress addr) const;
  // All materialized addresses, sorted.
  std::vector<DyadicAddress> addresses() const;

  // Fault-injection hook for the selfcheck command: erases the id from
  // every node list while keeping it in the registry, so oracle
  // comparisons must fail. Never called outside tests.
  void strip_id(std::int64_t id);

 private:
  struct AxisCover {
    std::vector<DyadicNode1D> cover;
    // Ancestors-or-self of the cover, deduplicated; flag marks cover members.
    std::vector<std::pair<DyadicNode1D, bool>> closure;
  };
  AxisCover axis_cover(Axis axis, std::int64_t lo, std::int64_t hi) const;
  void write_rect(const Rect& rect);

  CoordinateMap coords_;
  std::map<std::int64_t, Rect> rects_;
  std::unordered_map<DyadicAddress, NodeRecord, AddressHash> nodes_;
};

}  // namespace ust
