#include "frechet/engine.hpp"

#include "frechet/rng.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frechet {

namespace {

using Clock = std::chrono::steady_clock;

double us_since(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start)
      .count();
}

} // namespace

QueryEngine::QueryEngine(Database db, int leaf_capacity)
    : db_(std::move(db)), index_(leaf_capacity) {
  const auto t0 = Clock::now();

  std::vector<CurveSummary> summaries;
  summaries.reserve(db_.size());
  for (const Curve &c : db_.curves)
    summaries.push_back(c.summary());
  index_.build(summaries);

  // Lexicographic id ranks, so candidate lists and results can be ordered
  // deterministically without comparing strings per query.
  std::vector<std::uint32_t> by_id(db_.size());
  std::iota(by_id.begin(), by_id.end(), 0u);
  std::sort(by_id.begin(), by_id.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return db_[a].id() < db_[b].id();
            });
  id_rank_.resize(db_.size());
  for (std::uint32_t rank = 0; rank < by_id.size(); ++rank)
    id_rank_[by_id[rank]] = rank;

  if (!db_.curves.empty()) {
    bbox_ = summaries[0];
    for (const CurveSummary &s : summaries) {
      bbox_.min_x = std::min(bbox_.min_x, s.min_x);
      bbox_.max_x = std::max(bbox_.max_x, s.max_x);
      bbox_.min_y = std::min(bbox_.min_y, s.min_y);
      bbox_.max_y = std::max(bbox_.max_y, s.max_y);
    }
    for (const Curve &c : db_.curves)
      max_curve_length_ = std::max(max_curve_length_, c.length());
    const double ex = bbox_.max_x - bbox_.min_x;
    const double ey = bbox_.max_y - bbox_.min_y;
    db_extent_ = std::sqrt(ex * ex + ey * ey);
  }

  build_ms_ =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

QueryResult QueryEngine::run(const Curve &query, double delta,
                             const PipelineOptions &options,
                             DeciderWorkspace &ws) const {
  QueryResult result;
  const bool timed = options.collect_timings;

  const auto t0 = timed ? Clock::now() : Clock::time_point{};
  std::vector<std::uint32_t> candidates =
      index_.candidates(query.summary(), delta);
  std::sort(candidates.begin(), candidates.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return id_rank_[a] < id_rank_[b];
            });
  if (timed)
    result.timings.index_us = us_since(t0);
  result.candidate_count = candidates.size();

  CascadeOptions cascade{options.use_greedy, options.use_negative,
                         options.use_recursive, options.collect_timings};
  for (std::uint32_t pos : candidates) {
    const CascadeOutcome outcome =
        decide_cascade(query, db_[pos], delta, cascade, ws);
    result.timings.greedy_us += outcome.greedy_us;
    result.timings.negative_us += outcome.negative_us;
    result.timings.exact_us += outcome.exact_us;
    switch (outcome.resolved_by) {
    case CascadeStage::Greedy:
      ++result.resolved_by.greedy;
      break;
    case CascadeStage::Negative:
      ++result.resolved_by.negative;
      break;
    case CascadeStage::Exact:
      ++result.resolved_by.exact;
      break;
    }
    if (outcome.within)
      result.matches.push_back(pos);
  }
  result.false_positives = result.candidate_count - result.matches.size();
  return result; // candidates were visited in id order, so matches are too
}

QueryResult QueryEngine::run(const Curve &query, double delta,
                             const PipelineOptions &options) const {
  DeciderWorkspace ws;
  return run(query, delta, options, ws);
}

double QueryEngine::distance_upper_bound(const Curve &query) const {
  const CurveSummary &q = query.summary();
  const double min_x = std::min(q.min_x, bbox_.min_x);
  const double max_x = std::max(q.max_x, bbox_.max_x);
  const double min_y = std::min(q.min_y, bbox_.min_y);
  const double max_y = std::max(q.max_y, bbox_.max_y);
  const double ex = max_x - min_x, ey = max_y - min_y;
  return std::sqrt(ex * ex + ey * ey) + query.length() + max_curve_length_;
}

std::optional<GeneratedQuery> generate_query(const QueryEngine &engine,
                                             std::size_t k,
                                             std::mt19937_64 &g,
                                             const PipelineOptions &options) {
  const Database &db = engine.db();
  if (db.size() == 0)
    return std::nullopt;

  const std::size_t pos = rng::uniform_index(g, 0, db.size() - 1);
  const std::uint64_t jitter_seed = g();

  Curve query = db[pos];
  if (k == 0) {
    const double extent = engine.db_extent();
    const double amplitude = extent > 0.0 ? 1e-6 * extent : 1e-9;
    query = jitter_curve(db[pos], amplitude, jitter_seed,
                         db[pos].id() + "#jitter");
  }

  DeciderWorkspace ws;
  const double width0 = engine.distance_upper_bound(query);
  double lo = 0.0, hi = width0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const std::size_t count = engine.run(query, mid, options, ws).matches.size();
    if (count == k)
      return GeneratedQuery{std::move(query), mid, pos};
    if (count > k)
      hi = mid;
    else
      lo = mid;
    if (hi - lo < 1e-9 * width0)
      return std::nullopt; // bracket collapsed on a tie; redraw
  }
  return std::nullopt;
}

std::vector<QueryResult> run_queries(const QueryEngine &engine,
                                     const std::vector<Query> &queries,
                                     const PipelineOptions &options,
                                     int threads) {
  std::vector<QueryResult> results(queries.size());
  if (threads > 1) {
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
    {
      DeciderWorkspace ws;
#pragma omp for schedule(dynamic)
      for (long i = 0; i < static_cast<long>(queries.size()); ++i)
        results[i] =
            engine.run(queries[i].curve, queries[i].delta, options, ws);
    }
    return results;
#endif
  }
  DeciderWorkspace ws;
  for (std::size_t i = 0; i < queries.size(); ++i)
    results[i] = engine.run(queries[i].curve, queries[i].delta, options, ws);
  return results;
}

} // namespace frechet
