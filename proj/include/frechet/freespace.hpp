#ifndef FRECHET_FREESPACE_HPP
#define FRECHET_FREESPACE_HPP

#include <span>
#include <utility>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

/*
 * Free-space conventions used by every decider in this library:
 *
 * The joint parameter space of two curves pi (n vertices) and sigma
 * (m vertices) is the rectangle [0, n-1] x [0, m-1]; the first coordinate
 * moves along pi, the second along sigma. A point (s, t) is free iff
 * |pi(s) - sigma(t)| <= delta (closed predicate throughout). Cell (i, j) is
 * the unit box spanned by edge i of pi and edge j of sigma, 0-based.
 *
 * Side intervals of a cell are parameterized by [0,1] along the moving
 * curve's edge:
 *   left   = pi fixed at vertex i,   sigma moving on edge j
 *   bottom = sigma fixed at vertex j, pi moving on edge i
 *   right  = pi fixed at vertex i+1, sigma moving on edge j
 *   top    = sigma fixed at vertex j+1, pi moving on edge i
 */

/// Free (within-delta) portions of the four sides of one free-space cell.
struct CellBoundaries {
  Interval left, bottom, right, top;
};

/// Boundary intervals of cell (i, j); i < pi.size()-1, j < sigma.size()-1.
CellBoundaries cell_boundaries(const Curve &pi, const Curve &sigma,
                               std::size_t i, std::size_t j, double delta);

namespace detail {

/**
 * Reachability propagation across one convex cell. Inputs are the reachable
 * parts of the left and bottom sides (subsets of the cell's free
 * boundaries); free_right/free_top are the free intervals of the outgoing
 * sides. Any entry point on the bottom reaches every free point of the
 * right side; entry on the left at lowest parameter l reaches the free
 * right points with parameter >= l. Symmetrically for the top.
 */
inline std::pair<Interval, Interval>
propagate_step(const Interval &reach_left, const Interval &reach_bottom,
               const Interval &free_right, const Interval &free_top) {
  Interval right = Interval::none(), top = Interval::none();
  if (!reach_bottom.empty())
    right = free_right;
  else if (!reach_left.empty())
    right = intersect(free_right, Interval{reach_left.lo, 1.0});
  if (!reach_left.empty())
    top = free_top;
  else if (!reach_bottom.empty())
    top = intersect(free_top, Interval{reach_bottom.lo, 1.0});
  return {right, top};
}

/**
 * One step of the contiguous reachable run along a diagram boundary,
 * starting from the corner. `connected` tracks whether the run still
 * touches the current edge's first vertex; a blocked gap cuts everything
 * after it.
 */
inline Interval reach_prefix_step(bool &connected, const Interval &free_iv) {
  if (!connected || free_iv.empty() || free_iv.lo > 0.0) {
    connected = false;
    return Interval::none();
  }
  connected = free_iv.hi >= 1.0;
  return {0.0, free_iv.hi};
}

} // namespace detail

/// Reachable outputs (right, top) of one cell from its reachable inputs.
/// Pre: reach_left is a subset of bounds.left, reach_bottom of bounds.bottom.
std::pair<Interval, Interval> propagate_cell(const Interval &reach_left,
                                             const Interval &reach_bottom,
                                             const CellBoundaries &bounds);

/// Fills out[e], for each edge e of `moving`, with the reachable part of the
/// diagram boundary where `fixed` is the opposite curve's first vertex: the
/// contiguous free run from the corner. out.size() == moving.size()-1.
void boundary_reach_prefix(const Point &fixed, const Curve &moving,
                           double delta, std::span<Interval> out);

/**
 * Standard free-space decision procedure: true iff the Fréchet distance of
 * pi and sigma is at most delta. Sweeps the diagram one pi-edge at a time
 * with a single rolling column of sigma-edge intervals (O(m) memory,
 * O(n*m) time). This is the reference every other decision path in the
 * library is tested against.
 */
bool decide_standard(const Curve &pi, const Curve &sigma, double delta);

/// As above, reusing a caller-provided rolling column buffer.
bool decide_standard(const Curve &pi, const Curve &sigma, double delta,
                     std::vector<Interval> &column);

/// Upper bound on the Fréchet distance of two curves: the diameter of the
/// union of their bounding boxes plus both curve lengths.
double pair_distance_upper_bound(const Curve &a, const Curve &b);

/// Fréchet distance estimated by bisection over decide_standard. After
/// `iterations` halvings the returned value is a certified "yes" threshold
/// within 2^-iterations of the initial bracket width above the distance.
double estimate_distance(const Curve &a, const Curve &b, int iterations = 60);

} // namespace frechet

#endif
