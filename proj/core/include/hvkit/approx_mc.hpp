#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hvkit/point.hpp"
#include "hvkit/solution_set.hpp"

namespace hvkit {

struct McConfig {
  std::int64_t num_points = 1000;  ///< sample count k, >= 1
  std::uint64_t rng_seed = 0;
};

/// True iff some member of s weakly dominates q (q lies in the dominated
/// region). Boundary samples count as dominated.
bool dominated_by_set(const SolutionSet& s, std::span<const double> q);

/// Estimate from caller-supplied samples assumed uniform over a region of the
/// given volume: (dominated fraction) * sampling_volume. Shared core of hv_mc
/// and the forced-sample test hook.
double hv_mc_from_samples(const SolutionSet& s, double sampling_volume,
                          std::span<const std::vector<double>> samples);

/// Monte Carlo hypervolume estimate: k points sampled uniformly in the box
/// spanned by the ideal point of s and r; returns (k'/k) * V where k' counts
/// samples dominated by the set and V is the box volume. Deterministic for a
/// fixed (inputs, seed) pair.
double hv_mc(const SolutionSet& s, const ReferencePoint& r, const McConfig& cfg);

}  // namespace hvkit
