#ifndef FRECHET_ENGINE_HPP
#define FRECHET_ENGINE_HPP

#include <optional>
#include <random>

#include "frechet/dataset.hpp"
#include "frechet/decider.hpp"
#include "frechet/index.hpp"

namespace frechet {

/// Wall-clock time spent per query phase, microseconds.
struct PhaseTimings {
  double index_us = 0.0;
  double greedy_us = 0.0;
  double negative_us = 0.0;
  double exact_us = 0.0;

  double total_us() const {
    return index_us + greedy_us + negative_us + exact_us;
  }
};

/// How many candidates each cascade stage resolved.
struct StageCounts {
  std::size_t greedy = 0;
  std::size_t negative = 0;
  std::size_t exact = 0;
};

struct QueryResult {
  /// Matching curve positions, sorted lexicographically by id.
  std::vector<std::size_t> matches;
  std::size_t candidate_count = 0;
  /// Candidates that turned out not to match (index false positives).
  std::size_t false_positives = 0;
  PhaseTimings timings;
  StageCounts resolved_by;
};

struct PipelineOptions {
  bool use_greedy = true;
  bool use_negative = true;
  bool use_recursive = true;
  bool collect_timings = true;
};

/**
 * The range-search pipeline over one immutable database: candidate
 * enumeration through the spatial index followed by the per-candidate
 * decision cascade. After construction the engine is read-only and safe for
 * concurrent queries, each with its own workspace.
 */
class QueryEngine {
public:
  explicit QueryEngine(Database db, int leaf_capacity = 16);

  const Database &db() const { return db_; }
  const SpatialIndex &index() const { return index_; }
  double build_ms() const { return build_ms_; }

  QueryResult run(const Curve &query, double delta,
                  const PipelineOptions &options, DeciderWorkspace &ws) const;

  QueryResult run(const Curve &query, double delta,
                  const PipelineOptions &options = {}) const;

  /// Guaranteed upper bound on the Fréchet distance from `query` to any
  /// database curve: the diameter of the union of the bounding boxes plus
  /// both curve lengths (the query's and the longest stored one).
  double distance_upper_bound(const Curve &query) const;

  /// Diagonal of the database's summary bounding box.
  double db_extent() const { return db_extent_; }

private:
  Database db_;
  SpatialIndex index_;
  std::vector<std::uint32_t> id_rank_; // position -> lexicographic rank
  double db_extent_ = 0.0;
  double max_curve_length_ = 0.0;
  CurveSummary bbox_; // aggregate bounding box, start/end unused
  double build_ms_ = 0.0;
};

/// Query generated for a target output size.
struct GeneratedQuery {
  Curve curve;
  double delta = 0.0;
  std::size_t source_position = 0; // database curve the query came from
};

/**
 * Draws a random database curve and binary-searches a threshold whose
 * result count is exactly k, evaluating counts with the full pipeline.
 * Returns nullopt when 200 iterations pass without hitting k or the
 * bracket collapses below 1e-9 of its initial width (distance ties can make
 * some counts unreachable from some curves); the caller redraws.
 *
 * k = 0 needs a query at positive distance from every stored curve, which a
 * curve drawn from the database can never be (it matches itself at distance
 * zero under the closed predicate). For k = 0 the drawn curve is therefore
 * perturbed by a tiny per-vertex jitter (1e-6 of the database extent)
 * before the search.
 */
std::optional<GeneratedQuery> generate_query(const QueryEngine &engine,
                                             std::size_t k,
                                             std::mt19937_64 &rng,
                                             const PipelineOptions &options = {});

/// Runs queries[i] -> results[i], optionally in parallel (OpenMP) across
/// queries; results are deterministic and independent of thread count.
std::vector<QueryResult> run_queries(const QueryEngine &engine,
                                     const std::vector<Query> &queries,
                                     const PipelineOptions &options,
                                     int threads);

} // namespace frechet

#endif
