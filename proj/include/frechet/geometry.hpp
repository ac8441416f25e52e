#ifndef FRECHET_GEOMETRY_HPP
#define FRECHET_GEOMETRY_HPP

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace frechet {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double dist_sqr(const Point &p, const Point &q) {
  const double dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

inline double dist(const Point &p, const Point &q) {
  return std::sqrt(dist_sqr(p, q));
}

/**
 * A closed sub-interval of [0,1], parameterizing part of one curve edge.
 * lo > hi encodes the empty interval; none() is the canonical empty value.
 */
struct Interval {
  double lo = 1.0;
  double hi = 0.0;

  static constexpr Interval none() { return {1.0, 0.0}; }
  static constexpr Interval full() { return {0.0, 1.0}; }

  bool empty() const { return lo > hi; }
  bool contains(double t) const { return lo <= t && t <= hi; }
};

inline Interval intersect(const Interval &a, const Interval &b) {
  Interval r{a.lo > b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi};
  return r.empty() ? Interval::none() : r;
}

inline bool operator==(const Interval &a, const Interval &b) {
  return (a.empty() && b.empty()) || (a.lo == b.lo && a.hi == b.hi);
}

/**
 * The 8-component vector describing a curve: start point, end point, and the
 * coordinate-wise extrema over all vertices. Each component differs from the
 * corresponding component of a nearby curve by at most their Fréchet
 * distance, which makes the vector usable both as a lower bound and as an
 * indexing key.
 */
struct CurveSummary {
  double start_x = 0.0, start_y = 0.0;
  double end_x = 0.0, end_y = 0.0;
  double min_x = 0.0, max_x = 0.0;
  double min_y = 0.0, max_y = 0.0;
};

/// Summary of a non-empty vertex sequence. Throws std::invalid_argument on
/// an empty input.
CurveSummary summarize(std::span<const Point> vertices);

/**
 * Lower bound on the Fréchet distance of the two summarized curves: the
 * largest of the start-point distance, the end-point distance, and the four
 * absolute extrema differences. Symmetric, and never exceeds the true
 * Fréchet distance.
 */
double lb_frechet(const CurveSummary &a, const CurveSummary &b);

/**
 * The set {t in [0,1] : |seg_a + t*(seg_b - seg_a) - center| <= radius}.
 * By convexity of the Euclidean ball this is a single closed interval,
 * clamped to [0,1]; it may be empty. A degenerate segment yields [0,1] when
 * within the radius and the empty interval otherwise.
 */
Interval segment_circle_free_interval(const Point &seg_a, const Point &seg_b,
                                      const Point &center, double radius);

/**
 * An immutable polygonal trajectory: at least two vertices, all coordinates
 * finite. Prefix lengths and the summary vector are precomputed at
 * construction so that subcurve lengths and the indexing key are O(1).
 *
 * Vertex indices are 0-based throughout.
 */
class Curve {
public:
  /// Throws std::invalid_argument for fewer than two vertices or any
  /// non-finite coordinate; the message names the offending curve id.
  Curve(std::string id, std::vector<Point> vertices);

  const std::string &id() const { return id_; }
  std::size_t size() const { return vertices_.size(); }
  const Point &operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<Point> &vertices() const { return vertices_; }
  const CurveSummary &summary() const { return summary_; }

  /// Length of the vertex-0..i prefix; prefix_length(0) == 0.
  double prefix_length(std::size_t i) const { return prefix_lengths_[i]; }

  /// Total polygonal length.
  double length() const { return prefix_lengths_.back(); }

  /// Length of the subcurve between vertices `from` and `to` (from <= to),
  /// computed as a prefix-length difference in constant time.
  double subcurve_length(std::size_t from, std::size_t to) const {
    assert(from <= to && to < vertices_.size());
    return prefix_lengths_[to] - prefix_lengths_[from];
  }

  /// Position on the curve at continuous parameter t in [0, size()-1]:
  /// t = i + lambda lies on edge i at fraction lambda. Integer t returns the
  /// vertex exactly.
  Point interpolate(double t) const;

private:
  std::string id_;
  std::vector<Point> vertices_;
  std::vector<double> prefix_lengths_;
  CurveSummary summary_;
};

} // namespace frechet

#endif
