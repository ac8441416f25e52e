// frechet_range: range queries over trajectory databases under the
// continuous Fréchet distance.
//
// Subcommands: query (batch execution), bench (instrumented benchmark with
// ablations), gen (synthetic data emitter), selftest (randomized property
// suite). Exit codes: 0 success, 1 usage error, 2 data error, 3 selftest
// counterexample.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frechet/bench.hpp"
#include "frechet/dataset.hpp"
#include "frechet/engine.hpp"
#include "frechet/selftest.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct GeneratorArgs {
  std::string profile = "clustered-paths";
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::size_t min_vertices = 11;
  std::size_t max_vertices = 769;
  std::size_t hub_grid = 4;
  double hub_spacing = 100.0;
  double jitter = 5.0;

  frechet::SyntheticSpec to_spec() const {
    frechet::SyntheticSpec spec;
    spec.profile = frechet::profile_from_name(profile);
    spec.count = count;
    spec.seed = seed;
    spec.min_vertices = min_vertices;
    spec.max_vertices = max_vertices;
    spec.hub_grid = hub_grid;
    spec.hub_spacing = hub_spacing;
    spec.jitter = jitter;
    return spec;
  }

  void add_options(CLI::App *cmd) {
    cmd->add_option("--profile", profile,
                    "synthetic profile: clustered-paths | uniform");
    cmd->add_option("--count", count, "number of curves to generate");
    cmd->add_option("--min-vertices", min_vertices, "minimum vertex count");
    cmd->add_option("--max-vertices", max_vertices, "maximum vertex count");
    cmd->add_option("--hub-grid", hub_grid, "hub lattice side length");
    cmd->add_option("--hub-spacing", hub_spacing, "hub lattice pitch");
    cmd->add_option("--jitter", jitter, "per-vertex noise half-width");
  }
};

int cmd_query(const std::string &db_path, const std::string &queries_path,
              int threads, int capacity, const std::string &format) {
  auto t0 = Clock::now();
  frechet::Database db = frechet::load_database(db_path);
  const double load_ms = ms_since(t0);

  frechet::QueryEngine engine(std::move(db), capacity);
  const std::vector<frechet::Query> queries =
      frechet::load_queries(queries_path);

  t0 = Clock::now();
  const auto results =
      frechet::run_queries(engine, queries, frechet::PipelineOptions{}, threads);
  const double query_ms = ms_since(t0);

  const bool jsonl = format == "jsonl";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const frechet::QueryResult &r = results[i];
    if (jsonl) {
      nlohmann::json rec;
      rec["query"] = i;
      rec["delta"] = queries[i].delta;
      rec["count"] = r.matches.size();
      auto ids = nlohmann::json::array();
      for (std::size_t pos : r.matches)
        ids.push_back(engine.db()[pos].id());
      rec["ids"] = std::move(ids);
      rec["candidates"] = r.candidate_count;
      rec["false_positives"] = r.false_positives;
      rec["index_us"] = r.timings.index_us;
      rec["greedy_us"] = r.timings.greedy_us;
      rec["negative_us"] = r.timings.negative_us;
      rec["exact_us"] = r.timings.exact_us;
      rec["total_us"] = r.timings.total_us();
      rec["resolved_greedy"] = r.resolved_by.greedy;
      rec["resolved_negative"] = r.resolved_by.negative;
      rec["resolved_exact"] = r.resolved_by.exact;
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << i << " " << r.matches.size();
      for (std::size_t pos : r.matches)
        std::cout << " " << engine.db()[pos].id();
      std::cout << "\n";
    }
  }
  // Load and build time are reported separately; they are not part of any
  // per-query timing.
  std::cerr << "loaded " << engine.db().size() << " curves in " << load_ms
            << " ms, built index in " << engine.build_ms() << " ms, ran "
            << results.size() << " queries in " << query_ms << " ms\n";
  return 0;
}

int cmd_bench(const std::string &db_path, const GeneratorArgs &gen,
              std::vector<std::size_t> ks, std::size_t per_k,
              std::uint64_t seed, int threads, int capacity, bool warmup,
              const std::string &out_path) {
  frechet::Database db;
  if (!db_path.empty()) {
    db = frechet::load_database(db_path);
  } else {
    if (gen.count == 0)
      throw CLI::ValidationError(
          "bench", "either --db or --synthetic with --count is required");
    db = frechet::generate_synthetic(gen.to_spec());
  }
  frechet::QueryEngine engine(std::move(db), capacity);

  frechet::BenchConfig config;
  config.ks = std::move(ks);
  config.queries_per_k = per_k;
  config.seed = seed;
  config.threads = threads;
  config.warmup = warmup;
  const frechet::BenchReport report = frechet::run_bench(engine, config);

  std::cout << report.text_table();
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw frechet::DataError("cannot write report: " + out_path);
    out << report.to_json() << "\n";
    std::cerr << "report written to " << out_path << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Fréchet distance range search over trajectory databases"};
  app.require_subcommand(1);

  // query
  auto *query = app.add_subcommand("query", "run a batch of range queries");
  std::string q_db, q_queries, q_format = "text";
  int q_threads = 1, q_capacity = 16;
  query->add_option("--db", q_db, "database manifest file")->required();
  query->add_option("--queries", q_queries, "query file")->required();
  query->add_option("--threads", q_threads, "query-level parallelism");
  query->add_option("--capacity", q_capacity, "index leaf capacity");
  query->add_option("--format", q_format, "output format: text | jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}));

  // bench
  auto *bench = app.add_subcommand("bench", "instrumented benchmark");
  std::string b_db, b_out = "bench_report.json";
  GeneratorArgs b_gen;
  std::vector<std::size_t> b_ks = {0, 1, 10, 100};
  std::size_t b_per_k = 100;
  std::uint64_t b_seed = 1;
  int b_threads = 1, b_capacity = 16;
  bool b_warmup = false;
  bench->add_option("--db", b_db, "database manifest file");
  bench->add_flag("--synthetic", "use an in-memory synthetic database");
  b_gen.add_options(bench);
  bench->add_option("--k", b_ks, "output sizes to benchmark")
      ->delimiter(',');
  bench->add_option("--per-k", b_per_k,
                    "queries per output size (500 matches the reference "
                    "experiment setup)");
  bench->add_option("--seed", b_seed,
                    "seed for query generation and the synthetic database");
  bench->add_option("--threads", b_threads,
                    "adds a serial-vs-parallel throughput comparison");
  bench->add_option("--capacity", b_capacity, "index leaf capacity");
  bench->add_flag("--warmup", b_warmup,
                  "run each query once untimed before measuring");
  bench->add_option("--out", b_out, "machine-readable report path");

  // gen
  auto *gen = app.add_subcommand("gen", "emit a synthetic database");
  GeneratorArgs g_gen;
  std::string g_dir;
  g_gen.add_options(gen);
  gen->add_option("--seed", g_gen.seed, "generator seed");
  gen->add_option("--dir", g_dir, "output directory")->required();

  // selftest
  auto *selftest =
      app.add_subcommand("selftest", "randomized property suite");
  std::uint64_t s_seed = 1;
  std::size_t s_iterations = 1000;
  std::string s_repro = ".";
  selftest->add_option("--seed", s_seed, "rng seed");
  selftest->add_option("--iterations", s_iterations, "iteration count");
  selftest->add_option("--repro-dir", s_repro,
                       "directory for counterexample reproductions");

  try {
    app.parse(argc, argv);

    if (*query)
      return cmd_query(q_db, q_queries, q_threads, q_capacity, q_format);

    if (*bench) {
      b_gen.seed = b_seed;
      return cmd_bench(b_db, b_gen, b_ks, b_per_k, b_seed, b_threads,
                       b_capacity, b_warmup, b_out);
    }

    if (*gen) {
      if (g_gen.count == 0)
        throw CLI::ValidationError("gen", "--count must be positive");
      const frechet::Database db = frechet::generate_synthetic(g_gen.to_spec());
      const auto manifest = frechet::write_database(db, g_dir);
      std::cout << manifest.string() << "\n";
      return 0;
    }

    if (*selftest) {
      const frechet::SelftestReport report =
          frechet::run_selftest({s_seed, s_iterations, s_repro});
      std::cout << report.summary();
      return report.ok() ? 0 : 3;
    }
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const frechet::DataError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
