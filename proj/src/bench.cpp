#include "frechet/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace frechet {

namespace {

using Clock = std::chrono::steady_clock;

BenchStat stat_of(const std::vector<double> &values) {
  BenchStat s;
  if (values.empty())
    return s;
  double sum = 0.0;
  for (double v : values)
    sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values)
      sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

std::vector<double> scaled(const std::vector<double> &us, double f) {
  std::vector<double> out(us.size());
  for (std::size_t i = 0; i < us.size(); ++i)
    out[i] = us[i] * f;
  return out;
}

} // namespace

BenchReport run_bench(const QueryEngine &engine, const BenchConfig &config) {
  BenchReport report;
  report.database = engine.db().source;
  report.database_size = engine.db().size();
  report.build_ms = engine.build_ms();

  std::mt19937_64 rng(config.seed);
  const PipelineOptions timed{};
  const PipelineOptions untimed{true, true, true, false};
  const PipelineOptions no_greedy{false, true, true, true};
  const PipelineOptions no_negative{true, false, true, true};
  const PipelineOptions standard_exact{true, true, false, true};

  std::vector<Query> all_queries; // for the thread comparison
  DeciderWorkspace ws;

  for (std::size_t k : config.ks) {
    BenchRow row;
    row.k = k;

    std::vector<double> total_us, index_us, greedy_us, negative_us, exact_us;
    std::vector<double> ng_us, nn_us, std_us, fp;

    const std::size_t max_draws =
        config.max_draw_factor * config.queries_per_k + 10;
    std::size_t draws = 0;
    while (row.queries < config.queries_per_k) {
      if (++draws > max_draws)
        throw std::runtime_error(
            "bench: query generation starved for k=" + std::to_string(k) +
            " (" + std::to_string(draws - 1) + " rejected draws); the "
            "database may not admit thresholds with exactly this count");
      auto generated = generate_query(engine, k, rng, untimed);
      if (!generated)
        continue;

      if (config.warmup)
        engine.run(generated->curve, generated->delta, untimed, ws);
      const QueryResult full =
          engine.run(generated->curve, generated->delta, timed, ws);
      if (full.matches.size() != k)
        throw std::runtime_error("bench: generated query does not reproduce "
                                 "its output size for k=" +
                                 std::to_string(k));

      const QueryResult ab_ng =
          engine.run(generated->curve, generated->delta, no_greedy, ws);
      const QueryResult ab_nn =
          engine.run(generated->curve, generated->delta, no_negative, ws);
      const QueryResult ab_std =
          engine.run(generated->curve, generated->delta, standard_exact, ws);
      if (ab_ng.matches != full.matches || ab_nn.matches != full.matches ||
          ab_std.matches != full.matches)
        throw std::runtime_error(
            "bench: ablated pipeline produced a different result set (k=" +
            std::to_string(k) + ", source=" +
            engine.db()[generated->source_position].id() + ")");

      BenchQueryRecord rec;
      rec.k = k;
      rec.query_index = row.queries;
      rec.source_id = engine.db()[generated->source_position].id();
      rec.delta = generated->delta;
      rec.result_count = full.matches.size();
      rec.candidates = full.candidate_count;
      rec.false_positives = full.false_positives;
      rec.timings = full.timings;
      rec.total_no_greedy_us = ab_ng.timings.total_us();
      rec.total_no_negative_us = ab_nn.timings.total_us();
      rec.total_standard_us = ab_std.timings.total_us();

      total_us.push_back(full.timings.total_us());
      index_us.push_back(full.timings.index_us);
      greedy_us.push_back(full.timings.greedy_us);
      negative_us.push_back(full.timings.negative_us);
      exact_us.push_back(full.timings.exact_us);
      ng_us.push_back(rec.total_no_greedy_us);
      nn_us.push_back(rec.total_no_negative_us);
      std_us.push_back(rec.total_standard_us);
      fp.push_back(static_cast<double>(full.false_positives));

      all_queries.push_back({generated->curve, generated->delta});
      row.records.push_back(std::move(rec));
      ++row.queries;
    }

    constexpr double kToMs = 1e-3;
    row.total = stat_of(scaled(total_us, kToMs));
    row.index = stat_of(scaled(index_us, kToMs));
    row.greedy = stat_of(scaled(greedy_us, kToMs));
    row.negative = stat_of(scaled(negative_us, kToMs));
    row.exact = stat_of(scaled(exact_us, kToMs));
    row.total_no_greedy = stat_of(scaled(ng_us, kToMs));
    row.total_no_negative = stat_of(scaled(nn_us, kToMs));
    row.total_standard = stat_of(scaled(std_us, kToMs));
    row.false_positives = stat_of(fp);
    report.rows.push_back(std::move(row));
  }

  if (config.threads > 1 && !all_queries.empty()) {
    ThreadComparison cmp;
    cmp.threads = config.threads;

    auto t0 = Clock::now();
    const auto serial = run_queries(engine, all_queries, untimed, 1);
    cmp.serial_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    t0 = Clock::now();
    const auto parallel =
        run_queries(engine, all_queries, untimed, config.threads);
    cmp.parallel_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    for (std::size_t i = 0; i < serial.size(); ++i)
      if (serial[i].matches != parallel[i].matches)
        throw std::runtime_error(
            "bench: parallel execution changed a result set");
    report.thread_comparison = cmp;
  }

  return report;
}

std::string BenchReport::text_table() const {
  char buf[64];
  auto cell = [&](const BenchStat &s, const char *unit) {
    std::snprintf(buf, sizeof(buf), "%10.3f +- %-9.3f%s", s.mean, s.stddev,
                  unit);
    return std::string(buf);
  };

  std::ostringstream out;
  out << "database: " << database << " (" << database_size
      << " curves), index build " << build_ms << " ms\n";
  auto row = [&](const char *label, auto field, const char *unit) {
    out << label;
    for (const BenchRow &r : rows)
      out << cell(r.*field, unit);
    out << "\n";
  };

  out << "output size k:          ";
  for (const BenchRow &r : rows) {
    std::snprintf(buf, sizeof(buf), "%12zu (n=%-4zu)  ", r.k, r.queries);
    out << buf;
  }
  out << "\n";
  row("total:                  ", &BenchRow::total, " ms");
  row("time for quadtree:      ", &BenchRow::index, " ms");
  row("time for greedy filter: ", &BenchRow::greedy, " ms");
  row("time for negative filt: ", &BenchRow::negative, " ms");
  row("time for exact decider: ", &BenchRow::exact, " ms");
  row("total w/o greedy:       ", &BenchRow::total_no_greedy, " ms");
  row("total w/o negative:     ", &BenchRow::total_no_negative, " ms");
  row("total w/ standard decid:", &BenchRow::total_standard, " ms");
  row("index false positives:  ", &BenchRow::false_positives, "   ");
  if (thread_comparison) {
    out << "throughput: serial " << thread_comparison->serial_ms
        << " ms, parallel(" << thread_comparison->threads << ") "
        << thread_comparison->parallel_ms << " ms, speedup "
        << (thread_comparison->parallel_ms > 0.0
                ? thread_comparison->serial_ms / thread_comparison->parallel_ms
                : 0.0)
        << "x\n";
  }
  return std::move(out).str();
}

std::string BenchReport::to_json() const {
  nlohmann::json j;
  j["database"] = database;
  j["database_size"] = database_size;
  j["build_ms"] = build_ms;
  j["rows"] = nlohmann::json::array();
  for (const BenchRow &r : rows) {
    nlohmann::json row;
    row["k"] = r.k;
    row["queries"] = r.queries;
    auto stat = [](const BenchStat &s) {
      return nlohmann::json{{"mean", s.mean}, {"stddev", s.stddev}};
    };
    row["total_ms"] = stat(r.total);
    row["index_ms"] = stat(r.index);
    row["greedy_ms"] = stat(r.greedy);
    row["negative_ms"] = stat(r.negative);
    row["exact_ms"] = stat(r.exact);
    row["total_no_greedy_ms"] = stat(r.total_no_greedy);
    row["total_no_negative_ms"] = stat(r.total_no_negative);
    row["total_standard_decider_ms"] = stat(r.total_standard);
    row["false_positives"] = stat(r.false_positives);
    row["records"] = nlohmann::json::array();
    for (const BenchQueryRecord &rec : r.records) {
      row["records"].push_back({
          {"k", rec.k},
          {"query_index", rec.query_index},
          {"source_id", rec.source_id},
          {"delta", rec.delta},
          {"result_count", rec.result_count},
          {"candidates", rec.candidates},
          {"false_positives", rec.false_positives},
          {"index_us", rec.timings.index_us},
          {"greedy_us", rec.timings.greedy_us},
          {"negative_us", rec.timings.negative_us},
          {"exact_us", rec.timings.exact_us},
          {"total_us", rec.timings.total_us()},
          {"total_no_greedy_us", rec.total_no_greedy_us},
          {"total_no_negative_us", rec.total_no_negative_us},
          {"total_standard_us", rec.total_standard_us},
      });
    }
    j["rows"].push_back(std::move(row));
  }
  if (thread_comparison) {
    j["thread_comparison"] = {
        {"threads", thread_comparison->threads},
        {"serial_ms", thread_comparison->serial_ms},
        {"parallel_ms", thread_comparison->parallel_ms},
    };
  }
  return j.dump(2);
}

} // namespace frechet
