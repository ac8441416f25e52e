#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>

#include "frechet/dataset.hpp"
#include "frechet/freespace.hpp"
#include "oracles.hpp"

using namespace frechet;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    const auto stamp =
        std::chrono::steady_clock::now().time_since_epoch().count();
    path = fs::temp_directory_path() /
           ("frechet_test_" + std::to_string(stamp) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int &counter() {
    static int c = 0;
    return c;
  }
  fs::path file(const std::string &name, const std::string &content) const {
    const fs::path p = path / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }
};

} // namespace

TEST_CASE("load_database: minimal manifest and curve") {
  TempDir tmp;
  tmp.file("a.txt", "0 0\n1 0\n");
  const fs::path manifest = tmp.file("manifest.txt", "# comment\na.txt\n");
  const Database db = load_database(manifest);
  REQUIRE(db.size() == 1);
  CHECK(db[0].id() == "a.txt");
  CHECK(db[0].size() == 2);
  CHECK(db[0].length() == 1.0);
  CHECK(db.find("a.txt") == 0);
}

TEST_CASE("load_database: diagnosable errors name file and line") {
  TempDir tmp;

  SUBCASE("curve with fewer than 2 vertices") {
    tmp.file("short.txt", "0 0\n");
    const fs::path manifest = tmp.file("m.txt", "short.txt\n");
    CHECK_THROWS_WITH_AS(load_database(manifest),
                         doctest::Contains("fewer than 2"), DataError);
  }
  SUBCASE("malformed token") {
    tmp.file("bad.txt", "0 0\n1 zero\n");
    const fs::path manifest = tmp.file("m.txt", "bad.txt\n");
    try {
      load_database(manifest);
      FAIL("expected DataError");
    } catch (const DataError &e) {
      const std::string msg = e.what();
      CHECK(msg.find("bad.txt:2") != std::string::npos);
      CHECK(msg.find("zero") != std::string::npos);
    }
  }
  SUBCASE("missing curve file") {
    const fs::path manifest = tmp.file("m.txt", "ghost.txt\n");
    CHECK_THROWS_WITH_AS(load_database(manifest),
                         doctest::Contains("no such curve file"), DataError);
  }
  SUBCASE("duplicate path") {
    tmp.file("a.txt", "0 0\n1 0\n");
    const fs::path manifest = tmp.file("m.txt", "a.txt\na.txt\n");
    CHECK_THROWS_WITH_AS(load_database(manifest),
                         doctest::Contains("duplicate"), DataError);
  }
  SUBCASE("missing manifest") {
    CHECK_THROWS_AS(load_database(tmp.path / "nope.txt"), DataError);
  }
}

TEST_CASE("parser tolerates CRLF, tabs, extra columns and blank lines") {
  TempDir tmp;
  tmp.file("a.txt", "0\t0 extra ignored\r\n\r\n1.5  -2.25e0 42\r\n");
  const fs::path manifest = tmp.file("m.txt", "\r\n# c\r\na.txt\r\n");
  const Database db = load_database(manifest);
  REQUIRE(db.size() == 1);
  REQUIRE(db[0].size() == 2);
  CHECK(db[0][1].x == 1.5);
  CHECK(db[0][1].y == -2.25);
}

TEST_CASE("load_queries: grammar and delta validation") {
  TempDir tmp;
  tmp.file("q.txt", "0 0\n1 0\n");

  SUBCASE("valid line") {
    const fs::path qf = tmp.file("queries.txt", "q.txt 5.0\n");
    const auto queries = load_queries(qf);
    REQUIRE(queries.size() == 1);
    CHECK(queries[0].delta == 5.0);
    CHECK(queries[0].curve.size() == 2);
  }
  SUBCASE("delta zero is a legal query") {
    const auto queries = load_queries(tmp.file("queries.txt", "q.txt 0\n"));
    REQUIRE(queries.size() == 1);
    CHECK(queries[0].delta == 0.0);
  }
  SUBCASE("negative delta rejected") {
    CHECK_THROWS_WITH_AS(load_queries(tmp.file("queries.txt", "q.txt -1\n")),
                         doctest::Contains("delta"), DataError);
  }
  SUBCASE("nan delta rejected") {
    CHECK_THROWS_AS(load_queries(tmp.file("queries.txt", "q.txt nan\n")),
                    DataError);
  }
  SUBCASE("empty file yields no queries") {
    CHECK(load_queries(tmp.file("queries.txt", "")).empty());
  }
}

TEST_CASE("write_database/load_database round-trip is vertex exact") {
  SyntheticSpec spec;
  spec.count = 50;
  spec.seed = 77;
  spec.min_vertices = 3;
  spec.max_vertices = 24;
  const Database db = generate_synthetic(spec);

  TempDir tmp;
  const fs::path manifest = write_database(db, tmp.path / "out");
  const Database loaded = load_database(manifest);
  REQUIRE(loaded.size() == db.size());
  for (std::size_t pos = 0; pos < db.size(); ++pos) {
    REQUIRE(loaded[pos].size() == db[pos].size());
    for (std::size_t v = 0; v < db[pos].size(); ++v) {
      CHECK(loaded[pos][v].x == db[pos][v].x);
      CHECK(loaded[pos][v].y == db[pos][v].y);
    }
  }
}

TEST_CASE("generate_synthetic: determinism and basic shape") {
  SyntheticSpec spec;
  spec.count = 40;
  spec.seed = 5;
  spec.min_vertices = 11;
  spec.max_vertices = 30;

  const Database a = generate_synthetic(spec);
  const Database b = generate_synthetic(spec);
  REQUIRE(a.size() == 40);
  for (std::size_t pos = 0; pos < a.size(); ++pos) {
    REQUIRE(a[pos].size() == b[pos].size());
    for (std::size_t v = 0; v < a[pos].size(); ++v) {
      CHECK(a[pos][v].x == b[pos][v].x); // bitwise identical
      CHECK(a[pos][v].y == b[pos][v].y);
    }
    CHECK(a[pos].size() >= 11);
    CHECK(a[pos].size() <= 30);
  }

  spec.seed = 6;
  const Database c = generate_synthetic(spec);
  bool any_difference = false;
  for (std::size_t pos = 0; pos < a.size() && !any_difference; ++pos)
    any_difference = a[pos].size() != c[pos].size() ||
                     a[pos][0].x != c[pos][0].x;
  CHECK(any_difference);

  SyntheticSpec empty;
  empty.count = 0;
  CHECK(generate_synthetic(empty).size() == 0);

  CHECK_THROWS_AS(profile_from_name("banana"), DataError);
  CHECK(profile_from_name("uniform") == SyntheticSpec::Profile::Uniform);
}

TEST_CASE("clustered profile: curves sharing both hubs stay within three "
          "jitter amplitudes") {
  SyntheticSpec spec;
  spec.count = 150;
  spec.seed = 33;
  spec.min_vertices = 11;
  spec.max_vertices = 40;
  spec.hub_grid = 3;
  spec.hub_spacing = 100.0;
  spec.jitter = 5.0;
  const Database db = generate_synthetic(spec);

  // cluster mates are recognizable by their near-identical endpoints: the
  // hub spacing dwarfs the jitter, so anything closer than a quarter
  // spacing at both ends shares both hubs
  std::size_t pairs = 0, close_pairs = 0;
  for (std::size_t a = 0; a < db.size() && pairs < 200; ++a)
    for (std::size_t b = a + 1; b < db.size() && pairs < 200; ++b) {
      const CurveSummary &sa = db[a].summary(), &sb = db[b].summary();
      const double start = std::hypot(sa.start_x - sb.start_x,
                                      sa.start_y - sb.start_y);
      const double end =
          std::hypot(sa.end_x - sb.end_x, sa.end_y - sb.end_y);
      if (start > 25.0 || end > 25.0)
        continue;
      ++pairs;
      if (estimate_distance(db[a], db[b], 40) <= 3.0 * spec.jitter)
        ++close_pairs;
    }
  REQUIRE(pairs >= 50);
  CHECK(static_cast<double>(close_pairs) >=
        0.9 * static_cast<double>(pairs));
}

TEST_CASE("jitter_curve: deterministic, bounded perturbation") {
  std::mt19937_64 g(8);
  const Curve c = oracles::random_walk_curve(g, 15, "c");
  const Curve j1 = jitter_curve(c, 0.5, 99, "j");
  const Curve j2 = jitter_curve(c, 0.5, 99, "j");
  REQUIRE(j1.size() == c.size());
  for (std::size_t v = 0; v < c.size(); ++v) {
    CHECK(j1[v].x == j2[v].x);
    CHECK(std::abs(j1[v].x - c[v].x) <= 0.5);
    CHECK(std::abs(j1[v].y - c[v].y) <= 0.5);
  }
}
