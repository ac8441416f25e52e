#include "frechet/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace frechet {

CurveSummary summarize(std::span<const Point> vertices) {
  if (vertices.empty())
    throw std::invalid_argument("summarize: empty vertex sequence");

  CurveSummary s;
  s.start_x = vertices.front().x;
  s.start_y = vertices.front().y;
  s.end_x = vertices.back().x;
  s.end_y = vertices.back().y;
  s.min_x = s.max_x = vertices.front().x;
  s.min_y = s.max_y = vertices.front().y;
  for (const Point &p : vertices) {
    s.min_x = std::min(s.min_x, p.x);
    s.max_x = std::max(s.max_x, p.x);
    s.min_y = std::min(s.min_y, p.y);
    s.max_y = std::max(s.max_y, p.y);
  }
  return s;
}

double lb_frechet(const CurveSummary &a, const CurveSummary &b) {
  const double dx_start = a.start_x - b.start_x, dy_start = a.start_y - b.start_y;
  const double dx_end = a.end_x - b.end_x, dy_end = a.end_y - b.end_y;
  double lb = std::sqrt(dx_start * dx_start + dy_start * dy_start);
  lb = std::max(lb, std::sqrt(dx_end * dx_end + dy_end * dy_end));
  lb = std::max(lb, std::abs(a.min_x - b.min_x));
  lb = std::max(lb, std::abs(a.max_x - b.max_x));
  lb = std::max(lb, std::abs(a.min_y - b.min_y));
  lb = std::max(lb, std::abs(a.max_y - b.max_y));
  return lb;
}

Interval segment_circle_free_interval(const Point &seg_a, const Point &seg_b,
                                      const Point &center, double radius) {
  // Points seg_a + t*u with u := seg_b - seg_a are within the radius iff
  //   |t*u + v|^2 <= r^2,  v := seg_a - center
  // i.e.  (u.u) t^2 + 2 (u.v) t + (v.v - r^2) <= 0.
  const double ux = seg_b.x - seg_a.x, uy = seg_b.y - seg_a.y;
  const double vx = seg_a.x - center.x, vy = seg_a.y - center.y;
  const double a = ux * ux + uy * uy;
  const double b = ux * vx + uy * vy;
  const double c = vx * vx + vy * vy - radius * radius;

  if (a == 0.0) // degenerate segment
    return c <= 0.0 ? Interval::full() : Interval::none();

  double disc = b * b - a * c;
  if (disc < 0.0) {
    // Cancellation in b^2 - a*c can turn an exact tangency slightly
    // negative; clamp within a relative tolerance of the cancelled terms.
    if (disc >= -1e-12 * (b * b + std::abs(a * c)))
      disc = 0.0;
    else
      return Interval::none();
  }

  const double root = std::sqrt(disc);
  const double t_lo = (-b - root) / a;
  const double t_hi = (-b + root) / a;
  if (t_hi < 0.0 || t_lo > 1.0)
    return Interval::none();
  return {t_lo < 0.0 ? 0.0 : t_lo, t_hi > 1.0 ? 1.0 : t_hi};
}

Curve::Curve(std::string id, std::vector<Point> vertices)
    : id_(std::move(id)), vertices_(std::move(vertices)) {
  if (vertices_.size() < 2)
    throw std::invalid_argument("curve '" + id_ +
                                "': fewer than 2 vertices");
  for (const Point &p : vertices_)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("curve '" + id_ +
                                  "': non-finite coordinate");

  prefix_lengths_.resize(vertices_.size());
  prefix_lengths_[0] = 0.0;
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    prefix_lengths_[i] =
        prefix_lengths_[i - 1] + dist(vertices_[i - 1], vertices_[i]);
  summary_ = summarize(vertices_);
}

Point Curve::interpolate(double t) const {
  assert(t >= 0.0 && t <= static_cast<double>(vertices_.size() - 1));
  std::size_t i = static_cast<std::size_t>(t);
  if (i >= vertices_.size() - 1)
    i = vertices_.size() - 2;
  const double lambda = t - static_cast<double>(i);
  const Point &p = vertices_[i], &q = vertices_[i + 1];
  return {(1.0 - lambda) * p.x + lambda * q.x,
          (1.0 - lambda) * p.y + lambda * q.y};
}

} // namespace frechet
