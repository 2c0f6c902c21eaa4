#include "hvkit/solution_set.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hvkit/errors.hpp"

namespace hvkit {

SolutionSet::SolutionSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw InvalidArgumentError("SolutionSet: at least one point required");
  }
  const std::size_t m = points_.front().dim();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dim() != m) {
      throw DimensionMismatchError("SolutionSet: point " + std::to_string(i) + " has dimension " +
                                   std::to_string(points_[i].dim()) + ", expected " +
                                   std::to_string(m));
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw DuplicatePointError("SolutionSet: points " + std::to_string(i) + " and " +
                                  std::to_string(j) + " are identical");
      }
      if (dominates(points_[i], points_[j])) {
        throw DominatedPairError("SolutionSet: point " + std::to_string(i) + " dominates point " +
                                 std::to_string(j));
      }
      if (dominates(points_[j], points_[i])) {
        throw DominatedPairError("SolutionSet: point " + std::to_string(j) + " dominates point " +
                                 std::to_string(i));
      }
    }
  }
}

std::vector<double> SolutionSet::ideal_point() const {
  std::vector<double> ideal(points_.front().coords());
  for (std::size_t i = 1; i < points_.size(); ++i) {
    for (std::size_t j = 0; j < ideal.size(); ++j) {
      if (points_[i][j] < ideal[j]) {
        ideal[j] = points_[i][j];
      }
    }
  }
  return ideal;
}

std::vector<std::vector<Point>> non_dominated_sort(const std::vector<Point>& points) {
  if (points.empty()) {
    throw InvalidArgumentError("non_dominated_sort: empty input");
  }
  const std::size_t n = points.size();
  const std::size_t m = points.front().dim();
  for (std::size_t i = 1; i < n; ++i) {
    if (points[i].dim() != m) {
      throw DimensionMismatchError("non_dominated_sort: point " + std::to_string(i) +
                                   " has dimension " + std::to_string(points[i].dim()) +
                                   ", expected " + std::to_string(m));
    }
  }

  // Deb-style fast non-dominated sort over a flat coordinate buffer; each
  // unordered pair is classified in one scan.
  std::vector<double> flat(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      flat[i * m + j] = points[i][j];
    }
  }
  std::vector<int> domination_count(n, 0);
  std::vector<std::vector<std::size_t>> dominated(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* a = flat.data() + i * m;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double* b = flat.data() + j * m;
      bool a_le = true, b_le = true;
      for (std::size_t k = 0; k < m; ++k) {
        if (a[k] < b[k]) {
          b_le = false;
        } else if (b[k] < a[k]) {
          a_le = false;
        }
        if (!a_le && !b_le) {
          break;
        }
      }
      if (a_le == b_le) {
        continue;  // identical or incomparable
      }
      if (a_le) {
        dominated[i].push_back(j);
        ++domination_count[j];
      } else {
        dominated[j].push_back(i);
        ++domination_count[i];
      }
    }
  }

  std::vector<std::vector<Point>> fronts;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    if (domination_count[i] == 0) {
      current.push_back(i);
    }
  }
  while (!current.empty()) {
    std::vector<Point> front;
    front.reserve(current.size());
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      front.push_back(points[i]);
      for (std::size_t j : dominated[i]) {
        if (--domination_count[j] == 0) {
          next.push_back(j);
        }
      }
    }
    fronts.push_back(std::move(front));
    // Indices accumulate out of order while counts drain; restore input order.
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return fronts;
}

}  // namespace hvkit
