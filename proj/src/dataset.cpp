#include "frechet/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "frechet/rng.hpp"

namespace frechet {

namespace {

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DataError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Calls fn(line, line_number) for every line; strips a trailing '\r'.
template <typename Fn> void for_each_line(const std::string &text, Fn &&fn) {
  std::size_t start = 0, line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos)
      end = text.size();
    std::size_t len = end - start;
    if (len > 0 && text[start + len - 1] == '\r')
      --len;
    ++line_no;
    fn(std::string_view(text.data() + start, len), line_no);
    if (end == text.size())
      break;
    start = end + 1;
  }
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i]))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]))
      ++j;
    if (j > i)
      fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

double parse_real(std::string_view token, const std::filesystem::path &file,
                  std::size_t line_no) {
  double value = 0.0;
  const char *first = token.data(), *last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw DataError(file.string() + ":" + std::to_string(line_no) +
                    ": not a number: '" + std::string(token) + "'");
  return value;
}

} // namespace

Curve load_curve_file(const std::filesystem::path &path,
                      const std::string &id) {
  const std::string text = read_file(path);
  std::vector<Point> vertices;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto fields = split_fields(line);
    if (fields.empty())
      return; // blank line
    if (fields.size() < 2)
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected two coordinates");
    const double x = parse_real(fields[0], path, line_no);
    const double y = parse_real(fields[1], path, line_no);
    if (!std::isfinite(x) || !std::isfinite(y))
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": non-finite coordinate");
    vertices.push_back({x, y});
  });
  if (vertices.size() < 2)
    throw DataError(path.string() + ": curve has fewer than 2 vertices");
  return Curve(id, std::move(vertices));
}

Database load_database(const std::filesystem::path &manifest_path) {
  const std::string text = read_file(manifest_path);
  const std::filesystem::path base = manifest_path.parent_path();

  Database db;
  db.source = manifest_path.string();
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#')
      return;
    // the entire trimmed line is the path (paths may contain no tabs)
    std::string id(line.substr(line.find_first_not_of(" \t")));
    while (!id.empty() && is_space(id.back()))
      id.pop_back();
    if (db.position_of.count(id))
      throw DataError(manifest_path.string() + ":" + std::to_string(line_no) +
                      ": duplicate curve path '" + id + "'");
    const std::filesystem::path file = base / id;
    if (!std::filesystem::exists(file))
      throw DataError(manifest_path.string() + ":" + std::to_string(line_no) +
                      ": no such curve file: " + file.string());
    db.position_of.emplace(id, db.curves.size());
    db.curves.push_back(load_curve_file(file, id));
  });
  return db;
}

std::vector<Query> load_queries(const std::filesystem::path &path) {
  const std::string text = read_file(path);
  const std::filesystem::path base = path.parent_path();

  std::vector<Query> queries;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#')
      return;
    if (fields.size() < 2)
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected '<curve-file> <delta>'");
    const std::string id(fields[0]);
    const double delta = parse_real(fields[1], path, line_no);
    if (!std::isfinite(delta) || delta < 0.0)
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": delta must be finite and >= 0");
    const std::filesystem::path file = base / id;
    if (!std::filesystem::exists(file))
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": no such curve file: " + file.string());
    queries.push_back({load_curve_file(file, id), delta});
  });
  return queries;
}

std::filesystem::path write_database(const Database &db,
                                     const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path manifest = dir / "manifest.txt";
  std::ofstream mf(manifest, std::ios::binary);
  if (!mf)
    throw DataError("cannot write " + manifest.string());
  char name[32];
  for (std::size_t pos = 0; pos < db.size(); ++pos) {
    std::snprintf(name, sizeof(name), "c%05zu.txt", pos);
    mf << name << "\n";
    std::ofstream cf(dir / name, std::ios::binary);
    if (!cf)
      throw DataError(std::string("cannot write curve file ") + name);
    char line[80];
    for (const Point &p : db[pos].vertices()) {
      std::snprintf(line, sizeof(line), "%.17g %.17g\n", p.x, p.y);
      cf << line;
    }
  }
  return manifest;
}

SyntheticSpec::Profile profile_from_name(const std::string &name) {
  if (name == "clustered-paths")
    return SyntheticSpec::Profile::ClusteredPaths;
  if (name == "uniform")
    return SyntheticSpec::Profile::Uniform;
  throw DataError("unknown synthetic profile: '" + name +
                  "' (expected 'clustered-paths' or 'uniform')");
}

std::string profile_name(SyntheticSpec::Profile profile) {
  return profile == SyntheticSpec::Profile::ClusteredPaths ? "clustered-paths"
                                                           : "uniform";
}

namespace {

std::string synthetic_id(std::size_t i) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "syn%05zu", i);
  return buf;
}

std::vector<Point> clustered_path(const SyntheticSpec &spec,
                                  std::mt19937_64 &g,
                                  const std::vector<Point> &hubs,
                                  const std::vector<double> &pair_cdf) {
  // Skewed hub-pair popularity: a few heavily used routes produce large
  // clusters, so result counts grow smoothly with the threshold.
  const double r = rng::u01(g);
  const std::size_t pair_idx = static_cast<std::size_t>(
      std::lower_bound(pair_cdf.begin(), pair_cdf.end(), r) -
      pair_cdf.begin());
  const std::size_t h = hubs.size();
  const std::size_t a = pair_idx / (h - 1);
  std::size_t b = pair_idx % (h - 1);
  if (b >= a)
    ++b; // skip the diagonal

  const std::size_t n =
      rng::uniform_index(g, spec.min_vertices, spec.max_vertices);
  std::vector<Point> vertices(n);
  const Point &from = hubs[a], &to = hubs[b];
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    vertices[i] = {
        (1.0 - t) * from.x + t * to.x +
            rng::uniform(g, -spec.jitter, spec.jitter),
        (1.0 - t) * from.y + t * to.y +
            rng::uniform(g, -spec.jitter, spec.jitter),
    };
  }
  return vertices;
}

std::vector<Point> uniform_walk(const SyntheticSpec &spec,
                                std::mt19937_64 &g) {
  const std::size_t n =
      rng::uniform_index(g, spec.min_vertices, spec.max_vertices);
  std::vector<Point> vertices(n);
  vertices[0] = {rng::uniform(g, 0.0, spec.walk_extent),
                 rng::uniform(g, 0.0, spec.walk_extent)};
  for (std::size_t i = 1; i < n; ++i)
    vertices[i] = {vertices[i - 1].x + rng::uniform(g, -spec.step, spec.step),
                   vertices[i - 1].y + rng::uniform(g, -spec.step, spec.step)};
  return vertices;
}

} // namespace

Database generate_synthetic(const SyntheticSpec &spec) {
  if (spec.min_vertices < 2 || spec.min_vertices > spec.max_vertices)
    throw DataError("synthetic spec: invalid vertex count range");
  if (spec.profile == SyntheticSpec::Profile::ClusteredPaths &&
      spec.hub_grid < 2)
    throw DataError("synthetic spec: clustered-paths needs hub_grid >= 2");

  std::mt19937_64 g(spec.seed);
  Database db;
  db.source = "synthetic:" + profile_name(spec.profile) +
              ":count=" + std::to_string(spec.count) +
              ":seed=" + std::to_string(spec.seed);

  std::vector<Point> hubs;
  std::vector<double> pair_cdf;
  if (spec.profile == SyntheticSpec::Profile::ClusteredPaths) {
    for (std::size_t gy = 0; gy < spec.hub_grid; ++gy)
      for (std::size_t gx = 0; gx < spec.hub_grid; ++gx)
        hubs.push_back({spec.hub_spacing * static_cast<double>(gx),
                        spec.hub_spacing * static_cast<double>(gy)});
    const std::size_t pairs = hubs.size() * (hubs.size() - 1);
    pair_cdf.resize(pairs);
    double total = 0.0;
    for (std::size_t r = 0; r < pairs; ++r) {
      total += 1.0 / static_cast<double>(r + 1);
      pair_cdf[r] = total;
    }
    for (double &v : pair_cdf)
      v /= total;
  }

  db.curves.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    std::vector<Point> vertices =
        spec.profile == SyntheticSpec::Profile::ClusteredPaths
            ? clustered_path(spec, g, hubs, pair_cdf)
            : uniform_walk(spec, g);
    std::string id = synthetic_id(i);
    db.position_of.emplace(id, db.curves.size());
    db.curves.emplace_back(std::move(id), std::move(vertices));
  }
  return db;
}

Curve jitter_curve(const Curve &curve, double amplitude, std::uint64_t seed,
                   const std::string &new_id) {
  std::mt19937_64 g(seed);
  std::vector<Point> vertices = curve.vertices();
  for (Point &p : vertices) {
    p.x += rng::uniform(g, -amplitude, amplitude);
    p.y += rng::uniform(g, -amplitude, amplitude);
  }
  return Curve(new_id, std::move(vertices));
}

} // namespace frechet
