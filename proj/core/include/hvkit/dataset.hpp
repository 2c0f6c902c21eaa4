#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "hvkit/rng.hpp"
#include "hvkit/solution_set.hpp"

namespace hvkit {

/// A solution set in [0,1]^m with its exact hypervolume against the unit
/// reference point (1, ..., 1).
struct LabeledSet {
  SolutionSet set;
  double hv;
};

struct GenConfig {
  std::size_t objective_dim = 3;     ///< m
  std::size_t num_sets = 1000;       ///< L
  std::size_t max_set_size = 100;    ///< upper bound of the size draw
  std::size_t candidate_pool = 1000; ///< uniform candidates per pool
  std::uint64_t seed = 0;
  std::size_t max_pool_retries = 1000;
};

/// One solution set by the five-step procedure: draw a size num uniformly
/// from [1, max_set_size]; sample candidate_pool uniform points in [0,1)^m;
/// non-dominated sort; take the first front with at least num points,
/// redrawing the pool when no front is large enough; pick num points from
/// that front uniformly without replacement. The retry cap bounds the pool
/// redraw loop and aborts with a diagnostic when exhausted.
SolutionSet generate_solution_set(const GenConfig& cfg, Rng& rng);

/// num_sets generated sets, each labeled with its exact hypervolume against
/// the unit reference point. Set index i uses the derived seed
/// derive_seed(cfg.seed, i), so generation is reproducible set by set.
/// Labels of sets with at most 12 points are cross-checked against the
/// inclusion-exclusion oracle at generation time.
std::vector<LabeledSet> generate_labeled_dataset(const GenConfig& cfg);

/// Line-oriented file of records {"m": ..., "points": [[...], ...], "hv": ...},
/// one JSON object per line. Coordinates round-trip bit-exactly.
void write_dataset(const std::filesystem::path& path, std::span<const LabeledSet> data);

/// Parses and validates a labeled dataset. Errors name the offending line;
/// validation failures (dominated or duplicate pair, bad range) keep their
/// specific error type.
std::vector<LabeledSet> read_dataset(const std::filesystem::path& path);

/// Reads solution sets from the same record format, ignoring any "hv" field
/// and accepting coordinates outside [0,1]. For CLI inputs that are plain
/// sets rather than labeled canonical-frame data.
std::vector<SolutionSet> read_sets(const std::filesystem::path& path);

}  // namespace hvkit
