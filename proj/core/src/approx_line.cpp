#include "hvkit/approx_line.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hvkit/errors.hpp"
#include "hvkit/exact.hpp"
#include "hvkit/rng.hpp"

namespace hvkit {

DirectionSet::DirectionSet(std::vector<std::vector<double>> vectors, std::uint64_t seed)
    : vectors_(std::move(vectors)), seed_(seed) {
  if (vectors_.empty()) {
    throw InvalidArgumentError("DirectionSet: at least one direction required");
  }
  const std::size_t m = vectors_.front().size();
  if (m < 2) {
    throw InvalidArgumentError("DirectionSet: dimension must be >= 2");
  }
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const auto& v = vectors_[i];
    if (v.size() != m) {
      throw DimensionMismatchError("DirectionSet: vector " + std::to_string(i) +
                                   " has inconsistent dimension");
    }
    double norm_sq = 0.0;
    for (double c : v) {
      if (c < 0.0 || !std::isfinite(c)) {
        throw InvalidArgumentError("DirectionSet: vector " + std::to_string(i) +
                                   " has a negative or non-finite component");
      }
      norm_sq += c * c;
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-12) {
      throw InvalidArgumentError("DirectionSet: vector " + std::to_string(i) +
                                 " is not unit L2 norm");
    }
  }
}

std::vector<double> unv_direction(std::span<const double> z) {
  double norm_sq = 0.0;
  for (double c : z) {
    norm_sq += c * c;
  }
  if (norm_sq == 0.0) {
    throw InvalidArgumentError("unv_direction: zero vector");
  }
  const double norm = std::sqrt(norm_sq);
  std::vector<double> dir(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    dir[j] = std::abs(z[j]) / norm;
  }
  return dir;
}

DirectionSet generate_unv_directions(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1) {
    throw InvalidArgumentError("generate_unv_directions: n must be >= 1");
  }
  if (m < 2) {
    throw InvalidArgumentError("generate_unv_directions: m must be >= 2");
  }
  Rng rng(seed);
  std::vector<std::vector<double>> vectors;
  vectors.reserve(n);
  std::vector<double> z(m);
  while (vectors.size() < n) {
    double norm_sq = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      z[j] = rng.normal();
      norm_sq += z[j] * z[j];
    }
    if (norm_sq == 0.0) {
      continue;  // probability-zero degenerate draw
    }
    vectors.push_back(unv_direction(z));
  }
  return DirectionSet(std::move(vectors), seed);
}

double gamma_half_integer(double x) {
  const double two_x = 2.0 * x;
  if (!(x > 0.0) || two_x != std::floor(two_x)) {
    throw InvalidArgumentError("gamma_half_integer: argument must be a positive multiple of 1/2");
  }
  double value;
  double arg;
  if (std::floor(x) == x) {
    value = 1.0;  // Gamma(1)
    arg = 1.0;
  } else {
    value = std::sqrt(std::acos(-1.0));  // Gamma(1/2) = sqrt(pi)
    arg = 0.5;
  }
  while (arg < x) {
    value *= arg;
    arg += 1.0;
  }
  return value;
}

double line_length(const SolutionSet& s, const ReferencePoint& r, std::span<const double> direction) {
  if (direction.size() != s.dim() || r.dim() != s.dim()) {
    throw DimensionMismatchError("line_length: dimension mismatch");
  }
  bool all_zero = true;
  for (double c : direction) {
    if (c != 0.0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    throw InvalidArgumentError("line_length: all-zero direction");
  }
  double best = 0.0;
  for (const Point& p : s) {
    double len = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < direction.size(); ++j) {
      if (direction[j] > 0.0) {
        len = std::min(len, (r[j] - p[j]) / direction[j]);
      }
    }
    best = std::max(best, len);
  }
  return best;
}

double hv_line(const SolutionSet& s, const ReferencePoint& r, const DirectionSet& dirs) {
  if (dirs.dim() != s.dim()) {
    throw DimensionMismatchError("hv_line: direction dimension " + std::to_string(dirs.dim()) +
                                 ", set dimension " + std::to_string(s.dim()));
  }
  check_reference_dominated(s, r);
  const double m = static_cast<double>(s.dim());
  const double n = static_cast<double>(dirs.size());
  const double pi = std::acos(-1.0);
  const double coeff =
      std::pow(pi, m / 2.0) / (m * n * std::pow(2.0, m - 1.0) * gamma_half_integer(m / 2.0));
  double sum = 0.0;
  for (const auto& dir : dirs) {
    sum += std::pow(line_length(s, r, dir), m);
  }
  return coeff * sum;
}

}  // namespace hvkit
