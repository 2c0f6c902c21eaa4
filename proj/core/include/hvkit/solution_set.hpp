#pragma once

#include <cstddef>
#include <vector>

#include "hvkit/point.hpp"

namespace hvkit {

/// A set of mutually non-dominated, duplicate-free points of equal dimension.
/// The constructor validates all invariants and throws DominatedPairError,
/// DuplicatePointError, or DimensionMismatchError naming the offending pair.
/// Immutable after construction; point order is preserved.
class SolutionSet {
 public:
  explicit SolutionSet(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return points_.front().dim(); }
  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// Componentwise minimum over the set.
  std::vector<double> ideal_point() const;

 private:
  std::vector<Point> points_;
};

/// Layers the input into fronts: F1 is the non-dominated subset, F(k+1) is
/// the non-dominated subset once F1..Fk are removed. Fronts partition the
/// input and preserve input order within each front. Empty input is an error.
std::vector<std::vector<Point>> non_dominated_sort(const std::vector<Point>& points);

}  // namespace hvkit
