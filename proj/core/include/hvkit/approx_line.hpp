#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hvkit/point.hpp"
#include "hvkit/solution_set.hpp"

namespace hvkit {

/// Direction vectors for the line-based estimator: unit L2 norm (within
/// 1e-12), all components non-negative, equal dimension.
class DirectionSet {
 public:
  explicit DirectionSet(std::vector<std::vector<double>> vectors, std::uint64_t seed = 0);

  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t dim() const noexcept { return vectors_.front().size(); }
  const std::vector<double>& operator[](std::size_t i) const noexcept { return vectors_[i]; }
  std::uint64_t seed() const noexcept { return seed_; }

  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }

 private:
  std::vector<std::vector<double>> vectors_;
  std::uint64_t seed_;
};

/// The unit-normal-vector map: componentwise absolute value of z, scaled to
/// unit L2 norm. For z drawn standard normal the result is uniform on the
/// non-negative orthant of the unit sphere.
std::vector<double> unv_direction(std::span<const double> z);

/// n directions sampled by the UNV method, deterministic per seed.
DirectionSet generate_unv_directions(std::size_t n, std::size_t m, std::uint64_t seed);

/// Gamma function on the half-integer grid {1/2, 1, 3/2, 2, ...} via the
/// recurrence from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
double gamma_half_integer(double x);

/// Length of the segment from r into the dominated region along direction:
///   max over s of min over j of (r_j - s_j) / direction_j,
/// where a zero component drops out of the min. All-zero directions are an
/// error.
double line_length(const SolutionSet& s, const ReferencePoint& r, std::span<const double> direction);

/// Line-based (R2 / polar) hypervolume estimate:
///   pi^(m/2) / (m * n * 2^(m-1) * Gamma(m/2)) * sum_i l_i^m.
double hv_line(const SolutionSet& s, const ReferencePoint& r, const DirectionSet& dirs);

}  // namespace hvkit
