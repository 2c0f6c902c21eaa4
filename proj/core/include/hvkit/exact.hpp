#pragma once

#include <span>

#include "hvkit/point.hpp"
#include "hvkit/solution_set.hpp"

namespace hvkit {

/// Exact hypervolume of s bounded by r: the Lebesgue measure of the union of
/// boxes [s_i, r). Exclusive-volume recursion in the WFG family: the k-th
/// point contributes its inclusive box volume minus the volume it shares with
/// the points after it, computed recursively on the non-dominated limit set.
/// Requires r strictly dominated by every point (r_j > s_j for all j).
double hv_exact(const SolutionSet& s, const ReferencePoint& r);

/// Dimension-sweep hypervolume for m == 2: sort by the first objective and
/// accumulate rectangle slabs. Second, independent route for 2-D results.
double hv_exact_2d(const SolutionSet& s, const ReferencePoint& r);

/// Inclusion-exclusion over all nonempty subsets T:
///   sum (-1)^(|T|+1) * prod_j max(0, r_j - max_{s in T} s_j).
/// Brute-force verification oracle; accepts arbitrary point collections,
/// including mutually dominating ones. Limited to 20 points (2^N terms).
double hv_oracle_incl_excl(std::span<const Point> points, const ReferencePoint& r);
double hv_oracle_incl_excl(const SolutionSet& s, const ReferencePoint& r);

/// Throws ReferencePointError unless r_j > s_j for every point and axis.
void check_reference_dominated(const SolutionSet& s, const ReferencePoint& r);

}  // namespace hvkit
