#include "frechet/decider.hpp"

#include <chrono>
#include <limits>

namespace frechet {

FilterVerdict greedy_filter(const Curve &pi, const Curve &sigma,
                            double delta) {
  const std::size_t n = pi.size(), m = sigma.size();
  const double d2 = delta * delta;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  if (dist_sqr(pi[0], sigma[0]) > d2)
    return FilterVerdict::Unknown;

  std::size_t i = 0, j = 0;
  while (i + 1 < n || j + 1 < m) {
    const double d_pi = i + 1 < n ? dist_sqr(pi[i + 1], sigma[j]) : kInf;
    const double d_sigma = j + 1 < m ? dist_sqr(pi[i], sigma[j + 1]) : kInf;
    const double d_diag =
        (i + 1 < n && j + 1 < m) ? dist_sqr(pi[i + 1], sigma[j + 1]) : kInf;

    double step;
    if (d_diag <= d_pi && d_diag <= d_sigma) {
      ++i;
      ++j;
      step = d_diag;
    } else if (d_pi <= d_sigma) {
      ++i;
      step = d_pi;
    } else {
      ++j;
      step = d_sigma;
    }
    if (step > d2)
      return FilterVerdict::Unknown;
  }
  return FilterVerdict::CertifiedYes;
}

FilterVerdict negative_filter(const Curve &pi, const Curve &sigma,
                              double delta) {
  const std::size_t n = pi.size(), m = sigma.size();
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Earliest sigma vertex (at or after the previous one) whose distance to
    // pi[i], relaxed by the length of sigma's outgoing segment, is within
    // delta. No such vertex proves the distance exceeds delta.
    while (j < m) {
      const double slack = j + 1 < m ? dist(sigma[j], sigma[j + 1]) : 0.0;
      if (dist(sigma[j], pi[i]) - slack <= delta)
        break;
      ++j;
    }
    if (j == m)
      return FilterVerdict::CertifiedNo;
  }
  return FilterVerdict::Unknown;
}

namespace {

// Recursive block decomposition over a pair of in-place frontier arrays.
// ctx.column[j] holds the reachability interval of sigma edge j's vertical
// boundary at the pi position of the sweep; ctx.row[i] the pi edge i's
// horizontal boundary at the sigma position. Visiting a block consumes its
// left/bottom frontiers from those slots and leaves its right/top outputs
// in place, which is exactly what the sibling block expects next.
struct Recursion {
  const Curve &pi;
  const Curve &sigma;
  const double delta;
  Interval *column;
  Interval *row;
  RecursionStats &stats;

  bool corner_reachable(std::size_t p, std::size_t q) const {
    const Interval &l = column[q];
    const Interval &b = row[p];
    return (!l.empty() && l.lo == 0.0) || (!b.empty() && b.lo == 0.0);
  }

  void fill(std::size_t p, std::size_t b, std::size_t q, std::size_t d,
            const Interval &value) {
    for (std::size_t i = p; i < b; ++i)
      row[i] = value;
    for (std::size_t j = q; j < d; ++j)
      column[j] = value;
  }

#ifndef NDEBUG
  // Exhaustive soundness check of a fired shortcut on small blocks.
  void check_block_distances(std::size_t p, std::size_t b, std::size_t q,
                             std::size_t d, bool expect_within) const {
    if (b - p + 1 > 8 || d - q + 1 > 8)
      return;
    for (std::size_t i = p; i <= b; ++i)
      for (std::size_t j = q; j <= d; ++j) {
        const bool within = dist(pi[i], sigma[j]) <= delta;
        assert(within == expect_within);
      }
  }
#endif

  void visit(std::size_t p, std::size_t b, std::size_t q, std::size_t d) {
    ++stats.block_visits;

    bool any_input = false;
    for (std::size_t j = q; j < d && !any_input; ++j)
      any_input = !column[j].empty();
    for (std::size_t i = p; i < b && !any_input; ++i)
      any_input = !row[i].empty();
    if (!any_input) {
      ++stats.pruned_empty; // outputs stay empty
      return;
    }

    const double corner_gap = dist(pi[p], sigma[q]);
    const double lengths =
        pi.subcurve_length(p, b) + sigma.subcurve_length(q, d);

    if (corner_gap - lengths > delta) {
      // No point of the block's subcurves can come within delta of the
      // other: the whole block is unreachable.
      ++stats.shortcut_empty;
#ifndef NDEBUG
      check_block_distances(p, b, q, d, false);
#endif
      fill(p, b, q, d, Interval::none());
      return;
    }

    if (corner_gap + lengths <= delta && corner_reachable(p, q)) {
      // Every pair of points in the block is within delta, and the corner
      // is reachable, so every boundary point is reachable monotonically.
      ++stats.shortcut_full;
#ifndef NDEBUG
      check_block_distances(p, b, q, d, true);
#endif
      fill(p, b, q, d, Interval::full());
      return;
    }

    if (b == p + 1 && d == q + 1) {
      ++stats.cells;
      const Interval free_right = segment_circle_free_interval(
          sigma[q], sigma[q + 1], pi[b], delta);
      const Interval free_top =
          segment_circle_free_interval(pi[p], pi[p + 1], sigma[d], delta);
      auto [right, top] =
          detail::propagate_step(column[q], row[p], free_right, free_top);
      column[q] = right;
      row[p] = top;
      return;
    }

    if (b - p >= d - q) { // split the curve spanning more edges; ties -> pi
      const std::size_t r = (p + b) / 2;
      visit(p, r, q, d);
      visit(r, b, q, d);
    } else {
      const std::size_t s = (q + d) / 2;
      visit(p, b, q, s);
      visit(p, b, s, d);
    }
  }
};

} // namespace

bool decide_recursive(const Curve &pi, const Curve &sigma, double delta,
                      DeciderWorkspace &ws, RecursionStats *stats) {
  const std::size_t n = pi.size(), m = sigma.size();
  const double d2 = delta * delta;
  if (dist_sqr(pi[0], sigma[0]) > d2 ||
      dist_sqr(pi[n - 1], sigma[m - 1]) > d2)
    return false;

  ws.column.assign(m - 1, Interval::none());
  ws.row.assign(n - 1, Interval::none());
  boundary_reach_prefix(pi[0], sigma, delta, ws.column);
  boundary_reach_prefix(sigma[0], pi, delta, ws.row);

  RecursionStats local;
  Recursion rec{pi, sigma, delta, ws.column.data(), ws.row.data(),
                stats ? *stats : local};
  rec.visit(0, n - 1, 0, m - 1);

  const Interval &last_top = ws.row[n - 2];
  return !last_top.empty() && last_top.hi >= 1.0;
}

bool decide_recursive(const Curve &pi, const Curve &sigma, double delta) {
  DeciderWorkspace ws;
  return decide_recursive(pi, sigma, delta, ws);
}

namespace {

using Clock = std::chrono::steady_clock;

double us_since(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start)
      .count();
}

} // namespace

CascadeOutcome decide_cascade(const Curve &pi, const Curve &sigma,
                              double delta, const CascadeOptions &options,
                              DeciderWorkspace &ws, RecursionStats *stats) {
  CascadeOutcome out;
  const bool timed = options.collect_timings;

  if (options.use_greedy) {
    const auto t0 = timed ? Clock::now() : Clock::time_point{};
    const FilterVerdict v = greedy_filter(pi, sigma, delta);
    if (timed)
      out.greedy_us = us_since(t0);
    if (v == FilterVerdict::CertifiedYes) {
      out.within = true;
      out.resolved_by = CascadeStage::Greedy;
      return out;
    }
  }

  if (options.use_negative) {
    const auto t0 = timed ? Clock::now() : Clock::time_point{};
    FilterVerdict v = negative_filter(pi, sigma, delta);
    if (v != FilterVerdict::CertifiedNo)
      v = negative_filter(sigma, pi, delta);
    if (timed)
      out.negative_us = us_since(t0);
    if (v == FilterVerdict::CertifiedNo) {
      out.within = false;
      out.resolved_by = CascadeStage::Negative;
      return out;
    }
  }

  const auto t0 = timed ? Clock::now() : Clock::time_point{};
  out.within = options.use_recursive
                   ? decide_recursive(pi, sigma, delta, ws, stats)
                   : decide_standard(pi, sigma, delta, ws.column);
  if (timed)
    out.exact_us = us_since(t0);
  out.resolved_by = CascadeStage::Exact;
  return out;
}

} // namespace frechet
