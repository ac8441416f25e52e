#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "frechet/index.hpp"
#include "frechet/rng.hpp"
#include "oracles.hpp"

using namespace frechet;

namespace {

CurveSummary random_summary(std::mt19937_64 &g, double box = 100.0) {
  std::vector<Point> pts(4);
  for (Point &p : pts)
    p = {rng::uniform(g, -box, box), rng::uniform(g, -box, box)};
  return summarize(pts);
}

std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("empty index reports nothing") {
  SpatialIndex index;
  index.build({});
  CHECK(index.candidates(CurveSummary{}, 1e12).empty());
}

TEST_CASE("single point index") {
  std::mt19937_64 g(1);
  const CurveSummary s = random_summary(g);
  SpatialIndex index;
  index.build({s});
  const auto hit = index.candidates(s, 0.0);
  REQUIRE(hit.size() == 1);
  CHECK(hit[0] == 0);
  // far query in one coordinate: empty
  CurveSummary far = s;
  far.start_x += 1000.0;
  far.min_x += 1000.0;
  far.max_x += 1000.0;
  far.end_x += 1000.0;
  CHECK(index.candidates(far, 10.0).empty());
}

TEST_CASE("box query equals a linear containment scan") {
  std::mt19937_64 g(42);
  std::vector<CurveSummary> summaries(1000);
  for (auto &s : summaries)
    s = random_summary(g);
  SpatialIndex index(16);
  index.build(summaries);

  for (int it = 0; it < 100; ++it) {
    SpatialIndex::Key lo, hi;
    for (std::size_t k = 0; k < 8; ++k) {
      const double a = rng::uniform(g, -120, 120);
      const double b = rng::uniform(g, 0.0, 80.0);
      lo[k] = a;
      hi[k] = a + b;
    }
    std::vector<std::uint32_t> got;
    index.box_query(lo, hi, got);

    std::vector<std::uint32_t> expected;
    for (std::uint32_t id = 0; id < summaries.size(); ++id) {
      const auto key = SpatialIndex::key_of(summaries[id]);
      bool inside = true;
      for (std::size_t k = 0; k < 8 && inside; ++k)
        inside = lo[k] <= key[k] && key[k] <= hi[k];
      if (inside)
        expected.push_back(id);
    }
    CHECK(sorted(got) == expected);
  }
}

TEST_CASE("candidates equals the lower-bound linear scan and refinement "
          "only shrinks the box phase") {
  std::mt19937_64 g(4242);
  std::vector<CurveSummary> summaries(1000);
  for (auto &s : summaries)
    s = random_summary(g);
  SpatialIndex index(16);
  index.build(summaries);

  for (int it = 0; it < 100; ++it) {
    const CurveSummary q = random_summary(g);
    const double delta = rng::uniform(g, 0.0, 120.0);

    const auto got = sorted(index.candidates(q, delta));
    std::vector<std::uint32_t> expected;
    for (std::uint32_t id = 0; id < summaries.size(); ++id)
      if (lb_frechet(q, summaries[id]) <= delta)
        expected.push_back(id);
    CHECK(got == expected);

    // phase (a) superset check
    SpatialIndex::Key lo = SpatialIndex::key_of(q), hi = lo;
    for (std::size_t k = 0; k < 8; ++k) {
      lo[k] -= delta;
      hi[k] += delta;
    }
    std::vector<std::uint32_t> box;
    index.box_query(lo, hi, box);
    const auto box_sorted = sorted(box);
    CHECK(std::includes(box_sorted.begin(), box_sorted.end(), got.begin(),
                        got.end()));
  }
}

TEST_CASE("candidate sets are invariant under permuted insertion order") {
  std::mt19937_64 g(7);
  std::vector<CurveSummary> summaries(300);
  for (auto &s : summaries)
    s = random_summary(g);

  std::vector<std::uint32_t> perm(summaries.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i)
    perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), g);
  std::vector<CurveSummary> permuted(summaries.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    permuted[i] = summaries[perm[i]];

  SpatialIndex a(16), b(16);
  a.build(summaries);
  b.build(permuted);

  for (int it = 0; it < 50; ++it) {
    const CurveSummary q = random_summary(g);
    const double delta = rng::uniform(g, 0.0, 100.0);
    auto ga = a.candidates(q, delta);
    auto gb = b.candidates(q, delta);
    // map permuted ids back before comparing as sets
    for (auto &id : gb)
      id = perm[id];
    CHECK(sorted(std::move(ga)) == sorted(std::move(gb)));
  }
}

TEST_CASE("duplicate summaries beyond the leaf capacity are all stored") {
  std::mt19937_64 g(9);
  const CurveSummary dup = random_summary(g);
  std::vector<CurveSummary> summaries(50, dup);
  SpatialIndex index(4);
  index.build(summaries);
  CHECK(index.candidates(dup, 0.0).size() == 50);

  const auto stats = index.tree_stats();
  CHECK(stats.points == 50);
  // the identical points must sit together in one oversized leaf
  CHECK(stats.max_leaf_size == 50);
}

TEST_CASE("distinct points respect the leaf capacity") {
  std::mt19937_64 g(10);
  std::vector<CurveSummary> summaries(2000);
  for (auto &s : summaries)
    s = random_summary(g);
  SpatialIndex index(16);
  index.build(summaries);
  const auto stats = index.tree_stats();
  CHECK(stats.points == 2000);
  CHECK(stats.max_leaf_size <= 16);
  CHECK(stats.leaves > 1);
}

TEST_CASE("full-database recall: a box large enough returns every id") {
  std::mt19937_64 g(11);
  std::vector<CurveSummary> summaries(500);
  for (auto &s : summaries)
    s = random_summary(g);
  SpatialIndex index(16);
  index.build(summaries);
  const auto all = index.candidates(random_summary(g), 1e9);
  CHECK(all.size() == 500);
}
