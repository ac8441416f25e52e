#include "frechet/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "frechet/decider.hpp"
#include "frechet/engine.hpp"
#include "frechet/rng.hpp"

namespace frechet {

namespace {

Curve random_walk_curve(std::mt19937_64 &g, std::size_t n,
                        const std::string &id) {
  std::vector<Point> pts(n);
  pts[0] = {rng::uniform(g, -10.0, 10.0), rng::uniform(g, -10.0, 10.0)};
  const double step = rng::uniform(g, 0.1, 3.0);
  for (std::size_t i = 1; i < n; ++i)
    pts[i] = {pts[i - 1].x + rng::uniform(g, -step, step),
              pts[i - 1].y + rng::uniform(g, -step, step)};
  return Curve(id, std::move(pts));
}

std::vector<Point> subdivide(const std::vector<Point> &vertices,
                             std::size_t pieces) {
  std::vector<Point> out;
  out.reserve((vertices.size() - 1) * pieces + 1);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    for (std::size_t s = 0; s < pieces; ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(pieces);
      out.push_back({(1.0 - t) * vertices[i].x + t * vertices[i + 1].x,
                     (1.0 - t) * vertices[i].y + t * vertices[i + 1].y});
    }
  out.push_back(vertices.back());
  return out;
}

// Unrelated walks, a perturbed copy, or two finely subdivided perturbations
// of one base walk; the last flavor has edges much shorter than the
// distances involved, which is where the block shortcuts carry the load.
std::pair<Curve, Curve> random_pair(std::mt19937_64 &g) {
  const double flavor = rng::u01(g);
  if (flavor < 0.35) {
    Curve pi = random_walk_curve(g, rng::uniform_index(g, 2, 50), "pi");
    Curve sigma = random_walk_curve(g, rng::uniform_index(g, 2, 50), "sigma");
    return {std::move(pi), std::move(sigma)};
  }
  if (flavor < 0.7) {
    Curve pi = random_walk_curve(g, rng::uniform_index(g, 2, 50), "pi");
    const double amp = rng::uniform(g, 0.01, 2.0);
    Curve sigma = jitter_curve(pi, amp, g(), "sigma");
    return {std::move(pi), std::move(sigma)};
  }
  const std::size_t base_n = rng::uniform_index(g, 2, 5);
  const Curve base = random_walk_curve(g, base_n, "base");
  const std::size_t max_pieces = 49 / (base_n - 1);
  auto densified = [&](const std::string &id) {
    const std::size_t pieces = rng::uniform_index(g, 1, max_pieces);
    return Curve(id, subdivide(base.vertices(), pieces));
  };
  const double amp = rng::uniform(g, 0.005, 0.5);
  Curve pi = densified("pi");
  Curve sigma = jitter_curve(densified("sigma"), amp, g(), "sigma");
  return {std::move(pi), std::move(sigma)};
}

std::filesystem::path write_repro(const std::filesystem::path &dir,
                                  const Curve &pi, const Curve &sigma,
                                  double delta, const std::string &what) {
  std::filesystem::create_directories(dir);
  const auto path = dir / "selftest_repro.txt";
  std::ofstream out(path, std::ios::binary);
  out.precision(17);
  out << "# " << what << "\n# delta " << delta << "\n# pi\n";
  for (const Point &p : pi.vertices())
    out << p.x << " " << p.y << "\n";
  out << "# sigma\n";
  for (const Point &p : sigma.vertices())
    out << p.x << " " << p.y << "\n";
  return path;
}

} // namespace

std::string SelftestReport::summary() const {
  std::ostringstream out;
  out << "decider checks:  " << decider_checks << "\n"
      << "filter checks:   " << filter_checks << "\n"
      << "cell checks:     " << cell_checks << "\n"
      << "index checks:    " << index_checks << "\n"
      << "counterexamples: " << failures.size() << "\n";
  for (const std::string &f : failures)
    out << "  FAIL: " << f << "\n";
  if (repro_path)
    out << "  reproduction written to " << repro_path->string() << "\n";
  return std::move(out).str();
}

SelftestReport run_selftest(const SelftestConfig &config) {
  SelftestReport report;
  std::mt19937_64 g(config.seed);
  DeciderWorkspace ws;
  std::vector<Interval> column;

  auto fail = [&](const Curve &pi, const Curve &sigma, double delta,
                  const std::string &what) {
    report.failures.push_back(what + " (delta=" + std::to_string(delta) + ")");
    if (!report.repro_path)
      report.repro_path =
          write_repro(config.repro_dir, pi, sigma, delta, what);
  };

  // Deciders and filters against the standard sweep. The multipliers just
  // below 1 probe the band where an unsound shortcut would flip verdicts.
  static constexpr double kMultipliers[] = {0.5,   0.9,  0.99, 0.995,
                                            0.999, 1.0,  1.1,  2.0};
  for (std::size_t it = 0; it < config.iterations; ++it) {
    const auto [pi, sigma] = random_pair(g);
    const double estimate = estimate_distance(pi, sigma, 48);
    for (double mult : kMultipliers) {
      const double delta = mult * estimate;
      const bool oracle = decide_standard(pi, sigma, delta, column);

      RecursionStats stats;
      const bool recursive = decide_recursive(pi, sigma, delta, ws, &stats);
      ++report.decider_checks;
      if (recursive != oracle)
        fail(pi, sigma, delta, "decide_recursive disagrees with the sweep");

      const double nm =
          static_cast<double>(pi.size()) * static_cast<double>(sigma.size());
      const double bound = 4.0 * nm * std::log2(std::max(nm, 2.0));
      if (static_cast<double>(stats.block_visits) > bound)
        fail(pi, sigma, delta, "recursion exceeded its block-visit bound");

      const CascadeOutcome cascade =
          decide_cascade(pi, sigma, delta, CascadeOptions{}, ws);
      ++report.decider_checks;
      if (cascade.within != oracle)
        fail(pi, sigma, delta, "decide_cascade disagrees with the sweep");

      ++report.filter_checks;
      if (greedy_filter(pi, sigma, delta) == FilterVerdict::CertifiedYes &&
          !oracle)
        fail(pi, sigma, delta, "greedy filter certified a non-match");
      ++report.filter_checks;
      if ((negative_filter(pi, sigma, delta) == FilterVerdict::CertifiedNo ||
           negative_filter(sigma, pi, delta) == FilterVerdict::CertifiedNo) &&
          oracle)
        fail(pi, sigma, delta, "negative filter certified a match away");
    }

    // Cell propagation outputs stay inside the free boundary intervals.
    {
      const Curve &a = pi;
      const Curve &b = sigma;
      const std::size_t i = rng::uniform_index(g, 0, a.size() - 2);
      const std::size_t j = rng::uniform_index(g, 0, b.size() - 2);
      const double delta = rng::uniform(g, 0.0, 2.0) * (estimate + 0.1);
      const CellBoundaries bounds = cell_boundaries(a, b, i, j, delta);
      auto sub_interval = [&](const Interval &iv) {
        if (iv.empty())
          return Interval::none();
        const double lo = rng::uniform(g, iv.lo, iv.hi);
        return Interval{lo, rng::uniform(g, lo, iv.hi)};
      };
      const auto [right, top] = propagate_cell(
          sub_interval(bounds.left), sub_interval(bounds.bottom), bounds);
      ++report.cell_checks;
      if (!(intersect(right, bounds.right) == right) ||
          !(intersect(top, bounds.top) == top))
        fail(a, b, delta, "cell outputs escaped the free boundary");
    }
  }

  // Index box queries and candidate sets against linear scans.
  {
    const std::size_t points = std::min<std::size_t>(
        500, std::max<std::size_t>(50, config.iterations));
    std::vector<CurveSummary> summaries(points);
    std::vector<Point> pts(4);
    for (CurveSummary &s : summaries) {
      for (Point &p : pts)
        p = {rng::uniform(g, -100.0, 100.0), rng::uniform(g, -100.0, 100.0)};
      s = summarize(pts);
    }
    SpatialIndex index(8);
    index.build(summaries);
    for (int q = 0; q < 100; ++q) {
      for (Point &p : pts)
        p = {rng::uniform(g, -100.0, 100.0), rng::uniform(g, -100.0, 100.0)};
      const CurveSummary query = summarize(pts);
      const double delta = rng::uniform(g, 0.0, 150.0);

      std::vector<std::uint32_t> got = index.candidates(query, delta);
      std::sort(got.begin(), got.end());
      std::vector<std::uint32_t> expected;
      for (std::uint32_t id = 0; id < summaries.size(); ++id)
        if (lb_frechet(query, summaries[id]) <= delta)
          expected.push_back(id);
      ++report.index_checks;
      if (got != expected)
        report.failures.push_back(
            "index candidates differ from the linear scan (delta=" +
            std::to_string(delta) + ")");
    }
  }

  return report;
}

} // namespace frechet
