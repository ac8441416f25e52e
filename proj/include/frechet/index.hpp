#ifndef FRECHET_INDEX_HPP
#define FRECHET_INDEX_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

/**
 * Point-region tree over 8-dimensional curve summary vectors, the
 * multidimensional analogue of a quadtree. Each internal node splits its
 * region at the region center into up to 2^8 = 256 children, indexed by the
 * sign pattern of (point - center); children are allocated only when
 * non-empty. Leaves hold up to `leaf_capacity` points, except that a leaf
 * whose points are all identical never splits.
 *
 * Built once over a database, immutable afterwards; safe for any number of
 * concurrent readers. Stored ids are dense positions assigned by the
 * caller.
 */
class SpatialIndex {
public:
  using Key = std::array<double, 8>;

  static Key key_of(const CurveSummary &s) {
    return {s.start_x, s.start_y, s.end_x, s.end_y,
            s.min_x,   s.max_x,   s.min_y, s.max_y};
  }

  explicit SpatialIndex(int leaf_capacity = 16);
  ~SpatialIndex();
  SpatialIndex(SpatialIndex &&) noexcept;
  SpatialIndex &operator=(SpatialIndex &&) noexcept;

  /// Builds the tree over the given summaries; position i in the input
  /// becomes stored id i. Deterministic; an empty input yields an index
  /// that reports nothing.
  void build(const std::vector<CurveSummary> &summaries);

  std::size_t size() const { return keys_.size(); }
  int leaf_capacity() const { return leaf_capacity_; }

  /// Appends to `out` the ids of all stored points inside the closed box
  /// [lo_k, hi_k] in every component.
  void box_query(const Key &lo, const Key &hi,
                 std::vector<std::uint32_t> &out) const;

  /**
   * The candidate set for a query summary and threshold: all stored ids
   * whose lower-bound distance to the query is within delta. Phase one is
   * the orthogonal box query with half-width delta in every component (a
   * superset, since the box test relaxes the Euclidean start/end terms
   * coordinate-wise); phase two keeps exactly the ids with
   * lb_frechet <= delta.
   */
  std::vector<std::uint32_t> candidates(const CurveSummary &query,
                                        double delta) const;

  struct TreeStats {
    std::size_t points = 0;
    std::size_t leaves = 0;
    std::size_t internals = 0;
    std::size_t max_leaf_size = 0;
    std::size_t depth = 0;
  };
  TreeStats tree_stats() const;

private:
  struct Node;

  void insert(Node *node, std::uint32_t id, std::size_t depth);
  void split(Node *node, std::size_t depth);

  int leaf_capacity_;
  std::vector<Key> keys_;
  std::vector<CurveSummary> summaries_;
  std::unique_ptr<Node> root_;
};

} // namespace frechet

#endif
