#ifndef FRECHET_BENCH_HPP
#define FRECHET_BENCH_HPP

#include <optional>
#include <string>

#include "frechet/engine.hpp"

namespace frechet {

struct BenchConfig {
  std::vector<std::size_t> ks = {0, 1, 10, 100};
  std::size_t queries_per_k = 100;
  std::uint64_t seed = 1;
  /// Parallel throughput comparison runs when threads > 1; the per-phase
  /// measurements themselves are always taken serially.
  int threads = 1;
  /// Run each query once untimed before measuring (off by default so every
  /// measurement is a cold run).
  bool warmup = false;
  /// Give up on a k after this many factor*queries_per_k rejected draws.
  std::size_t max_draw_factor = 200;
};

/// Mean and sample standard deviation of one measured quantity.
struct BenchStat {
  double mean = 0.0;
  double stddev = 0.0;
};

/// Everything measured for a single generated query (the sidecar record;
/// aggregate statistics are recomputable from these).
struct BenchQueryRecord {
  std::size_t k = 0;
  std::size_t query_index = 0;
  std::string source_id; // database curve the query was generated from
  double delta = 0.0;
  std::size_t result_count = 0;
  std::size_t candidates = 0;
  std::size_t false_positives = 0;
  PhaseTimings timings;              // full pipeline
  double total_no_greedy_us = 0.0;   // greedy filter disabled
  double total_no_negative_us = 0.0; // negative filter disabled
  double total_standard_us = 0.0;    // standard decider as the exact stage
};

/// Aggregates over one output size k. Times in milliseconds.
struct BenchRow {
  std::size_t k = 0;
  std::size_t queries = 0;
  BenchStat total, index, greedy, negative, exact;
  BenchStat total_no_greedy, total_no_negative, total_standard;
  BenchStat false_positives; // counts, not times
  std::vector<BenchQueryRecord> records;
};

struct ThreadComparison {
  int threads = 1;
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::optional<ThreadComparison> thread_comparison;
  std::string database;
  std::size_t database_size = 0;
  double build_ms = 0.0;

  /// Aligned table, one column per output size.
  std::string text_table() const;
  /// Machine-readable form, including all per-query records.
  std::string to_json() const;
};

/**
 * Runs the full benchmark: for each k, generates queries with exactly k
 * results, measures every pipeline phase per query, and re-runs each query
 * under the three ablations (no greedy filter, no negative filter, standard
 * decider as the exact stage). Throws if any ablation produces a result set
 * different from the full pipeline's, or if query generation starves.
 */
BenchReport run_bench(const QueryEngine &engine, const BenchConfig &config);

} // namespace frechet

#endif
