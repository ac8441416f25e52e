#ifndef FRECHET_DECIDER_HPP
#define FRECHET_DECIDER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "frechet/freespace.hpp"
#include "frechet/geometry.hpp"

namespace frechet {

/// Outcome of a cheap one-sided filter. CertifiedYes and CertifiedNo are
/// sound: they are only produced when the filter has a proof.
enum class FilterVerdict { CertifiedYes, CertifiedNo, Unknown };

/**
 * Greedy positive filter, O(n+m). Walks the vertex grid from (0,0) to
 * (n-1,m-1), at each step taking the in-range successor among
 * {(i+1,j), (i,j+1), (i+1,j+1)} with the smallest vertex distance; ties
 * prefer the diagonal, then the pi step. Returns CertifiedYes iff every
 * visited vertex pair (including start and end) is within delta.
 *
 * Soundness: the walk is a monotone coupling of the vertex sequences, and
 * interpolating both curves linearly between consecutive coupled pairs
 * keeps the distance below the larger of the two endpoint distances (the
 * distance along such a simultaneous linear move is a convex combination of
 * the endpoint differences). Hence a walk within delta proves the
 * continuous Fréchet distance is at most delta. The check is on vertex
 * pairs only; the interpolation argument covers the positions in between.
 */
FilterVerdict greedy_filter(const Curve &pi, const Curve &sigma, double delta);

/**
 * Discrete negative filter, O(n+m) per orientation. Tracks, for each vertex
 * of pi in order, the earliest vertex of sigma (never moving backwards)
 * whose distance, relaxed by the length of sigma's outgoing segment, is
 * within delta; the relaxation term at sigma's last vertex is 0. The
 * tracked vertex rounds down the earliest on-curve position any within-delta
 * traversal can occupy, so if no admissible vertex remains the filter
 * returns CertifiedNo. Otherwise Unknown.
 *
 * The test is not symmetric in the two curves; the cascade runs it in both
 * orientations.
 */
FilterVerdict negative_filter(const Curve &pi, const Curve &sigma,
                              double delta);

/**
 * A frontier is the recursion state of the divide-and-conquer decider: the
 * ordered reachability intervals along one side of a block, one interval
 * per boundary edge, each a subset of that edge's free interval.
 */
using Frontier = std::span<Interval>;

/// Counters describing one recursive decision run.
struct RecursionStats {
  std::uint64_t block_visits = 0;  ///< recursion nodes entered
  std::uint64_t pruned_empty = 0;  ///< blocks with all-empty input frontiers
  std::uint64_t shortcut_empty = 0; ///< triangle-inequality empty blocks
  std::uint64_t shortcut_full = 0;  ///< triangle-inequality full blocks
  std::uint64_t cells = 0;          ///< single cells handled exactly
};

/// Reusable scratch buffers for the deciders; sized n+m once per curve pair,
/// no allocation inside the recursion.
struct DeciderWorkspace {
  std::vector<Interval> column; ///< one interval per sigma edge
  std::vector<Interval> row;    ///< one interval per pi edge
};

/**
 * Recursive free-space decider: true iff the Fréchet distance of pi and
 * sigma is at most delta. Agrees with decide_standard on every input.
 *
 * The reachable free-space is partitioned recursively into blocks
 * [p,b] x [q,d] of vertex ranges, with input frontiers on the left column
 * and bottom row and output frontiers on the right column and top row.
 * Each block is resolved, in order, by:
 *   - all-empty input frontiers: outputs empty;
 *   - corner distance minus both subcurve lengths exceeding delta: the
 *     block's free space is empty (triangle inequality), outputs empty;
 *   - corner distance plus both subcurve lengths within delta and the
 *     lower-left corner reachable: the block is completely free and fully
 *     reachable, outputs full;
 *   - a single cell: exact propagation as in the standard algorithm;
 *   - otherwise: split the curve spanning more edges (ties split pi) at the
 *     midpoint and solve the halves in order, the first half's outputs
 *     feeding the second half.
 * When a fully free block's corner is not reachable the block is split
 * anyway; recursion restores exactness.
 *
 * Worst case O(n*m) block visits (every leaf covers at least one cell, so
 * there are at most 2*(n-1)*(m-1) nodes); the complexity guard in the test
 * suite uses the documented bound 4 * n * m * log2(max(n*m, 2)).
 */
bool decide_recursive(const Curve &pi, const Curve &sigma, double delta,
                      DeciderWorkspace &ws, RecursionStats *stats = nullptr);

/// Convenience overload with private scratch buffers.
bool decide_recursive(const Curve &pi, const Curve &sigma, double delta);

/// Which stage of the cascade produced the verdict.
enum class CascadeStage { Greedy, Negative, Exact };

/// Stage toggles; disabling the recursive decider substitutes the standard
/// sweep for the exact stage (used by the benchmark ablations).
struct CascadeOptions {
  bool use_greedy = true;
  bool use_negative = true;
  bool use_recursive = true;
  bool collect_timings = true;
};

struct CascadeOutcome {
  bool within = false;
  CascadeStage resolved_by = CascadeStage::Exact;
  double greedy_us = 0.0;
  double negative_us = 0.0;
  double exact_us = 0.0;
};

/**
 * Per-candidate decision cascade: the greedy filter may certify yes, the
 * negative filter (both orientations, early exit) may certify no, and
 * whatever remains goes to the exact decider. Result always equals
 * decide_standard.
 */
CascadeOutcome decide_cascade(const Curve &pi, const Curve &sigma,
                              double delta, const CascadeOptions &options,
                              DeciderWorkspace &ws,
                              RecursionStats *stats = nullptr);

} // namespace frechet

#endif
