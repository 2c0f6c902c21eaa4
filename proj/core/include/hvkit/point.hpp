#pragma once

#include <cstddef>
#include <vector>

namespace hvkit {

/// One solution in m-dimensional objective space, minimization orientation.
/// Invariants: at least two coordinates, all finite.
class Point {
 public:
  explicit Point(std::vector<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t j) const noexcept { return coords_[j]; }
  const std::vector<double>& coords() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// Upper corner of the measured region. Same coordinate invariants as Point;
/// the strict-domination relation to a solution set is checked by the
/// operations that consume the pair.
class ReferencePoint {
 public:
  explicit ReferencePoint(std::vector<double> coords);

  /// Reference point (1, ..., 1), the canonical frame used by HV-Net.
  static ReferencePoint unit(std::size_t dim);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t j) const noexcept { return coords_[j]; }
  const std::vector<double>& coords() const noexcept { return coords_; }

  friend bool operator==(const ReferencePoint&, const ReferencePoint&) = default;

 private:
  std::vector<double> coords_;
};

/// Strict Pareto dominance: a <= b componentwise with at least one strict
/// inequality. Exact floating-point comparisons, no epsilon.
bool dominates(const Point& a, const Point& b);

/// a <= b componentwise.
bool weakly_dominates(const Point& a, const Point& b);

}  // namespace hvkit
