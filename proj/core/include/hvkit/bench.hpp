#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hvkit/dataset.hpp"
#include "hvkit/hvnet.hpp"
#include "hvkit/solution_set.hpp"

namespace hvkit {

/// Relative absolute deviation of an estimate from the exact value:
/// |approx - exact| / exact. Same formula as the MAPE loss; exact must be
/// positive.
double approximation_error(double approx, double exact);

/// One group of labeled testing sets, all of the same dimension.
struct TestGroup {
  std::size_t objective_dim = 0;
  std::size_t group_id = 0;
  std::vector<LabeledSet> sets;
};

/// One estimator configuration for the harness. prepare() runs inside the
/// timed region once per timed pass (the line-based method regenerates its
/// direction set there); estimate() is called per set with (group id, set
/// index) so seeded methods stay reproducible.
struct BenchMethod {
  std::string method;
  std::string config;
  std::function<void()> prepare;
  std::function<double(const SolutionSet&, std::size_t group_id, std::size_t set_index)> estimate;
};

/// Monte Carlo estimator with k samples; the per-set seed is derived from
/// (seed, group id, set index).
BenchMethod make_point_method(std::int64_t k, std::uint64_t seed);

/// Line-based estimator with n UNV directions of dimension m, regenerated
/// from its seed inside each timed pass.
BenchMethod make_line_method(std::size_t n, std::size_t m, std::uint64_t seed);

/// HV-Net estimator; sets are expected in the canonical frame already.
BenchMethod make_hvnet_method(std::shared_ptr<const HvNetModel> model, std::string label);

struct BenchRecord {
  std::string method;
  std::string config;
  std::size_t m = 0;
  std::size_t group = 0;
  double mean_error = 0.0;  ///< mean approximation error over the group
  double runtime_s = 0.0;   ///< wall-clock seconds of the timed evaluation pass
};

/// Runs every method over every group: one untimed warm-up pass, then a
/// timed pass (steady clock) around prepare() plus the per-set evaluation
/// loop. Label computation, IO, and error aggregation stay outside the timed
/// region. All groups must share one objective dimension.
std::vector<BenchRecord> run_benchmark(std::span<const BenchMethod> methods,
                                       std::span<const TestGroup> groups);

/// CSV with header method,config,m,group,mean_error,runtime_s.
void write_bench_csv(const std::filesystem::path& path, std::span<const BenchRecord> records);

/// Per-method aggregate of mean errors: {"methods": {name: {mean, std, records}}}.
void write_bench_summary_json(const std::filesystem::path& path,
                              std::span<const BenchRecord> records);

}  // namespace hvkit
