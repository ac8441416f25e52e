#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frechet/geometry.hpp"
#include "frechet/freespace.hpp"
#include "oracles.hpp"

using namespace frechet;

TEST_CASE("summarize: components are start, end and extrema") {
  const std::vector<Point> two = {{0, 0}, {1, 0}};
  const CurveSummary s2 = summarize(two);
  CHECK(s2.start_x == 0.0);
  CHECK(s2.start_y == 0.0);
  CHECK(s2.end_x == 1.0);
  CHECK(s2.end_y == 0.0);
  CHECK(s2.min_x == 0.0);
  CHECK(s2.max_x == 1.0);
  CHECK(s2.min_y == 0.0);
  CHECK(s2.max_y == 0.0);

  // a single vertex is fine for the pure function
  const std::vector<Point> one = {{0, 0}};
  const CurveSummary s1 = summarize(one);
  CHECK(s1.end_x == 0.0);
  CHECK(s1.max_y == 0.0);

  const std::vector<Point> three = {{0, 0}, {2, 3}, {1, -1}};
  const CurveSummary s3 = summarize(three);
  CHECK(s3.start_x == 0.0);
  CHECK(s3.start_y == 0.0);
  CHECK(s3.end_x == 1.0);
  CHECK(s3.end_y == -1.0);
  CHECK(s3.min_x == 0.0);
  CHECK(s3.max_x == 2.0);
  CHECK(s3.min_y == -1.0);
  CHECK(s3.max_y == 3.0);

  CHECK_THROWS_AS(summarize({}), std::invalid_argument);
}

TEST_CASE("lb_frechet: identity, translation, mixed-term example") {
  const Curve c("c", {{0, 0}, {1, 0}, {2, 3}});
  CHECK(lb_frechet(c.summary(), c.summary()) == 0.0);

  // translating by (3,4) forces start/end distances 5 and extrema
  // differences 3 and 4
  std::vector<Point> moved;
  for (const Point &p : c.vertices())
    moved.push_back({p.x + 3.0, p.y + 4.0});
  const Curve t("t", std::move(moved));
  CHECK(lb_frechet(c.summary(), t.summary()) == doctest::Approx(5.0).epsilon(1e-15));

  const Curve pi("pi", {{0, 0}, {10, 0}});
  const Curve sigma("sigma", {{0, 0}, {10, 5}});
  CHECK(lb_frechet(pi.summary(), sigma.summary()) == 5.0);
  // and the true distance is indeed at least that
  const double est = estimate_distance(pi, sigma);
  CHECK(est >= 5.0 - 1e-9);
}

TEST_CASE("lb_frechet properties: symmetry, translation invariance, "
          "soundness against the bisected distance") {
  std::mt19937_64 g(12345);
  for (int it = 0; it < 200; ++it) {
    const auto [pi, sigma] = oracles::random_pair(g, 12);
    const double lb = lb_frechet(pi.summary(), sigma.summary());
    CHECK(lb == lb_frechet(sigma.summary(), pi.summary()));

    const double dx = rng::uniform(g, -50, 50), dy = rng::uniform(g, -50, 50);
    auto shift = [&](const Curve &c) {
      std::vector<Point> pts;
      for (const Point &p : c.vertices())
        pts.push_back({p.x + dx, p.y + dy});
      return Curve(c.id() + "+", std::move(pts));
    };
    const double lb_shifted =
        lb_frechet(shift(pi).summary(), shift(sigma).summary());
    CHECK(lb_shifted == doctest::Approx(lb).epsilon(1e-9));

    const double est = estimate_distance(pi, sigma, 48);
    CHECK(lb <= est + 1e-9);
  }
}

TEST_CASE("interpolate: vertices exactly, fractions linearly") {
  const Curve c2("c", {{0, 0}, {2, 0}});
  CHECK(c2.interpolate(0.0).x == 0.0);
  CHECK(c2.interpolate(0.0).y == 0.0);
  CHECK(c2.interpolate(0.5).x == 1.0);
  CHECK(c2.interpolate(1.0).x == 2.0);

  const Curve c3("c", {{0, 0}, {2, 0}, {2, 2}});
  const Point p = c3.interpolate(1.25);
  CHECK(p.x == doctest::Approx(2.0));
  CHECK(p.y == doctest::Approx(0.5));
}

TEST_CASE("subcurve_length: telescoping prefix differences") {
  const Curve c("c", {{0, 0}, {3, 0}, {3, 4}});
  CHECK(c.subcurve_length(1, 1) == 0.0);
  CHECK(c.subcurve_length(0, 2) == c.length());
  CHECK(c.subcurve_length(1, 2) == 4.0);

  std::mt19937_64 g(99);
  const Curve r = oracles::random_walk_curve(g, 20, "r");
  for (int it = 0; it < 50; ++it) {
    std::size_t a = rng::uniform_index(g, 0, 19);
    std::size_t b = rng::uniform_index(g, 0, 19);
    std::size_t c2 = rng::uniform_index(g, 0, 19);
    std::size_t idx[3] = {a, b, c2};
    std::sort(idx, idx + 3);
    // telescoping; summing the two rounded prefix differences reintroduces
    // at most one ulp-scale rounding step
    CHECK(r.subcurve_length(idx[0], idx[1]) + r.subcurve_length(idx[1], idx[2]) ==
          doctest::Approx(r.subcurve_length(idx[0], idx[2])).epsilon(1e-13));
  }
}

TEST_CASE("segment_circle_free_interval: chords, misses, tangency, "
          "degenerate segments") {
  const Interval chord =
      segment_circle_free_interval({-2, 0}, {2, 0}, {0, 0}, 1.0);
  CHECK(chord.lo == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(chord.hi == doctest::Approx(0.75).epsilon(1e-12));

  CHECK(segment_circle_free_interval({0, 0}, {1, 0}, {5, 5}, 1.0).empty());

  const Interval tangent =
      segment_circle_free_interval({0, 0}, {2, 0}, {1, 1}, 1.0);
  REQUIRE(!tangent.empty());
  CHECK(tangent.lo == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(tangent.hi == doctest::Approx(0.5).epsilon(1e-9));

  CHECK(segment_circle_free_interval({1, 1}, {1, 1}, {1, 1.5}, 1.0) ==
        Interval::full());
  CHECK(segment_circle_free_interval({1, 1}, {1, 1}, {1, 3}, 1.0).empty());
}

TEST_CASE("segment_circle_free_interval: endpoints satisfy the distance "
          "predicate") {
  std::mt19937_64 g(4242);
  int nonempty = 0;
  for (int it = 0; it < 2000; ++it) {
    const Point a{rng::uniform(g, -5, 5), rng::uniform(g, -5, 5)};
    const Point b{rng::uniform(g, -5, 5), rng::uniform(g, -5, 5)};
    const Point c{rng::uniform(g, -5, 5), rng::uniform(g, -5, 5)};
    const double r = rng::uniform(g, 0.0, 4.0);
    const Interval iv = segment_circle_free_interval(a, b, c, r);
    if (iv.empty())
      continue;
    ++nonempty;
    auto at = [&](double t) {
      return Point{(1 - t) * a.x + t * b.x, (1 - t) * a.y + t * b.y};
    };
    CHECK(dist(at(iv.lo), c) <= r + 1e-9);
    CHECK(dist(at(iv.hi), c) <= r + 1e-9);
    CHECK(iv.lo >= 0.0);
    CHECK(iv.hi <= 1.0);
  }
  CHECK(nonempty > 100); // the property was actually exercised
}

TEST_CASE("curve validation and prefix lengths") {
  CHECK_THROWS_AS(Curve("one", {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Curve("nan", {{0, 0}, {std::nan(""), 1}}),
                  std::invalid_argument);

  std::mt19937_64 g(7);
  const Curve c = oracles::random_walk_curve(g, 30, "c");
  CHECK(c.prefix_length(0) == 0.0);
  for (std::size_t i = 1; i < c.size(); ++i) {
    CHECK(c.prefix_length(i) >= c.prefix_length(i - 1));
    CHECK(c.prefix_length(i) - c.prefix_length(i - 1) ==
          doctest::Approx(dist(c[i - 1], c[i])).epsilon(1e-12));
  }
  // summary matches a from-scratch recomputation
  const CurveSummary s = summarize(c.vertices());
  CHECK(s.start_x == c.summary().start_x);
  CHECK(s.max_y == c.summary().max_y);
}
