#include "frechet/freespace.hpp"

namespace frechet {

CellBoundaries cell_boundaries(const Curve &pi, const Curve &sigma,
                               std::size_t i, std::size_t j, double delta) {
  assert(i + 1 < pi.size() && j + 1 < sigma.size());
  CellBoundaries b;
  b.left = segment_circle_free_interval(sigma[j], sigma[j + 1], pi[i], delta);
  b.bottom = segment_circle_free_interval(pi[i], pi[i + 1], sigma[j], delta);
  b.right =
      segment_circle_free_interval(sigma[j], sigma[j + 1], pi[i + 1], delta);
  b.top =
      segment_circle_free_interval(pi[i], pi[i + 1], sigma[j + 1], delta);
  return b;
}

std::pair<Interval, Interval> propagate_cell(const Interval &reach_left,
                                             const Interval &reach_bottom,
                                             const CellBoundaries &bounds) {
  return detail::propagate_step(reach_left, reach_bottom, bounds.right,
                                bounds.top);
}

void boundary_reach_prefix(const Point &fixed, const Curve &moving,
                           double delta, std::span<Interval> out) {
  assert(out.size() == moving.size() - 1);
  bool connected = dist_sqr(fixed, moving[0]) <= delta * delta;
  for (std::size_t e = 0; e + 1 < moving.size(); ++e)
    out[e] = detail::reach_prefix_step(
        connected,
        segment_circle_free_interval(moving[e], moving[e + 1], fixed, delta));
}

bool decide_standard(const Curve &pi, const Curve &sigma, double delta,
                     std::vector<Interval> &column) {
  const std::size_t n = pi.size(), m = sigma.size();
  const double d2 = delta * delta;
  if (dist_sqr(pi[0], sigma[0]) > d2 ||
      dist_sqr(pi[n - 1], sigma[m - 1]) > d2)
    return false;

  // column[j]: reachable part of the vertical edge at the current pi
  // vertex, for sigma edge j. Rolling storage, one column at a time.
  column.assign(m - 1, Interval::none());
  boundary_reach_prefix(pi[0], sigma, delta, column);

  bool bottom_connected = true; // corner freeness checked above
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Interval horiz = detail::reach_prefix_step(
        bottom_connected,
        segment_circle_free_interval(pi[i], pi[i + 1], sigma[0], delta));
    bool any = !horiz.empty();
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const Interval left = column[j];
      if (left.empty() && horiz.empty()) {
        column[j] = Interval::none();
        continue;
      }
      const Interval free_right =
          segment_circle_free_interval(sigma[j], sigma[j + 1], pi[i + 1], delta);
      const Interval free_top =
          segment_circle_free_interval(pi[i], pi[i + 1], sigma[j + 1], delta);
      auto [right, top] = detail::propagate_step(left, horiz, free_right, free_top);
      column[j] = right;
      horiz = top;
      any = any || !right.empty() || !top.empty();
    }
    if (i + 2 == n)
      return !horiz.empty() && horiz.hi >= 1.0;
    if (!any && !bottom_connected)
      return false; // no reachable edge ahead of this column
  }
  return false; // unreachable: n >= 2 always returns inside the loop
}

bool decide_standard(const Curve &pi, const Curve &sigma, double delta) {
  std::vector<Interval> column;
  return decide_standard(pi, sigma, delta, column);
}

double pair_distance_upper_bound(const Curve &a, const Curve &b) {
  const CurveSummary &sa = a.summary(), &sb = b.summary();
  const double ex =
      std::max(sa.max_x, sb.max_x) - std::min(sa.min_x, sb.min_x);
  const double ey =
      std::max(sa.max_y, sb.max_y) - std::min(sa.min_y, sb.min_y);
  return std::sqrt(ex * ex + ey * ey) + a.length() + b.length();
}

double estimate_distance(const Curve &a, const Curve &b, int iterations) {
  std::vector<Interval> column;
  if (decide_standard(a, b, 0.0, column))
    return 0.0;
  double lo = 0.0, hi = pair_distance_upper_bound(a, b);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break; // bracket exhausted at double precision
    if (decide_standard(a, b, mid, column))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

} // namespace frechet
