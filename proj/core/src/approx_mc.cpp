#include "hvkit/approx_mc.hpp"

#include <string>

#include "hvkit/errors.hpp"
#include "hvkit/exact.hpp"
#include "hvkit/rng.hpp"

namespace hvkit {

bool dominated_by_set(const SolutionSet& s, std::span<const double> q) {
  if (q.size() != s.dim()) {
    throw DimensionMismatchError("dominated_by_set: sample dimension mismatch");
  }
  for (const Point& p : s) {
    bool dominated = true;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (p[j] > q[j]) {
        dominated = false;
        break;
      }
    }
    if (dominated) {
      return true;
    }
  }
  return false;
}

double hv_mc_from_samples(const SolutionSet& s, double sampling_volume,
                          std::span<const std::vector<double>> samples) {
  if (samples.empty()) {
    throw InvalidArgumentError("hv_mc_from_samples: no samples");
  }
  std::size_t inside = 0;
  for (const std::vector<double>& q : samples) {
    if (dominated_by_set(s, q)) {
      ++inside;
    }
  }
  return (static_cast<double>(inside) / static_cast<double>(samples.size())) * sampling_volume;
}

double hv_mc(const SolutionSet& s, const ReferencePoint& r, const McConfig& cfg) {
  if (cfg.num_points < 1) {
    throw InvalidArgumentError("hv_mc: num_points must be >= 1, got " +
                               std::to_string(cfg.num_points));
  }
  check_reference_dominated(s, r);

  const std::size_t m = s.dim();
  const std::vector<double> lower = s.ideal_point();
  double volume = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    volume *= r[j] - lower[j];
  }

  Rng rng(cfg.rng_seed);
  std::vector<double> q(m);
  std::int64_t inside = 0;
  for (std::int64_t i = 0; i < cfg.num_points; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      q[j] = lower[j] + rng.uniform01() * (r[j] - lower[j]);
    }
    if (dominated_by_set(s, q)) {
      ++inside;
    }
  }
  return (static_cast<double>(inside) / static_cast<double>(cfg.num_points)) * volume;
}

}  // namespace hvkit
