#pragma once

#include <cmath>
#include <vector>

#include "hvkit/point.hpp"
#include "hvkit/rng.hpp"
#include "hvkit/solution_set.hpp"

namespace hvkit::testutil {

inline std::vector<Point> random_points(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(m);
    for (double& v : c) {
      v = rng.uniform01();
    }
    pts.emplace_back(std::move(c));
  }
  return pts;
}

// First non-dominated front of a uniform pool, truncated to max_points.
// Independent of non_dominated_sort: plain pairwise filtering.
inline SolutionSet random_front(std::size_t m, std::size_t pool, std::size_t max_points,
                                Rng& rng) {
  const std::vector<Point> pts = random_points(pool, m, rng);
  std::vector<Point> front;
  for (std::size_t i = 0; i < pts.size() && front.size() < max_points; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i && dominates(pts[j], pts[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      front.push_back(pts[i]);
    }
  }
  return SolutionSet(std::move(front));
}

// n points on the standard simplex (coordinates positive, summing to 1):
// mutually non-dominated by construction, inside [0,1]^m.
inline SolutionSet simplex_set(std::size_t m, std::size_t n, Rng& rng) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(m);
    double sum = 0.0;
    for (double& v : c) {
      v = -std::log(1.0 - rng.uniform01());
      sum += v;
    }
    for (double& v : c) {
      v /= sum;
    }
    pts.emplace_back(std::move(c));
  }
  return SolutionSet(std::move(pts));
}

}  // namespace hvkit::testutil
