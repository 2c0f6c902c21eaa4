#include "hvkit/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hvkit/errors.hpp"

namespace hvkit {

namespace {

using Rows = std::vector<std::vector<double>>;

double inclusive_volume(const std::vector<double>& p, const std::vector<double>& ref) {
  double v = 1.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    v *= ref[j] - p[j];
  }
  return v;
}

bool row_weakly_dominates(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) {
      return false;
    }
  }
  return true;
}

// Keeps the non-dominated rows; among identical rows the first survives.
Rows filter_non_dominated(const Rows& rows) {
  Rows kept;
  kept.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool removed = false;
    for (std::size_t j = 0; j < rows.size() && !removed; ++j) {
      if (j == i) {
        continue;
      }
      if (row_weakly_dominates(rows[j], rows[i]) && (rows[j] != rows[i] || j < i)) {
        removed = true;
      }
    }
    if (!removed) {
      kept.push_back(rows[i]);
    }
  }
  return kept;
}

// rows must be mutually non-dominated and duplicate-free, m == 2.
double sweep_2d(Rows rows, const std::vector<double>& ref) {
  std::sort(rows.begin(), rows.end(),
            [](const std::vector<double>& a, const std::vector<double>& b) { return a[0] < b[0]; });
  double hv = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double next_x = (i + 1 < rows.size()) ? rows[i + 1][0] : ref[0];
    hv += (next_x - rows[i][0]) * (ref[1] - rows[i][1]);
  }
  return hv;
}

double wfg_hv(Rows rows, const std::vector<double>& ref) {
  if (rows.empty()) {
    return 0.0;
  }
  if (rows.size() == 1) {
    return inclusive_volume(rows.front(), ref);
  }
  if (ref.size() == 2) {
    return sweep_2d(std::move(rows), ref);
  }
  std::sort(rows.begin(), rows.end(), [](const std::vector<double>& a, const std::vector<double>& b) {
    return a.back() < b.back();
  });
  const std::size_t m = ref.size();
  double total = 0.0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Rows limited;
    limited.reserve(rows.size() - k - 1);
    for (std::size_t j = k + 1; j < rows.size(); ++j) {
      std::vector<double> w(m);
      for (std::size_t c = 0; c < m; ++c) {
        w[c] = std::max(rows[k][c], rows[j][c]);
      }
      limited.push_back(std::move(w));
    }
    total += inclusive_volume(rows[k], ref) - wfg_hv(filter_non_dominated(limited), ref);
  }
  return total;
}

Rows to_rows(const SolutionSet& s) {
  Rows rows;
  rows.reserve(s.size());
  for (const Point& p : s) {
    rows.push_back(p.coords());
  }
  return rows;
}

}  // namespace

void check_reference_dominated(const SolutionSet& s, const ReferencePoint& r) {
  if (r.dim() != s.dim()) {
    throw DimensionMismatchError("reference point has dimension " + std::to_string(r.dim()) +
                                 ", set has " + std::to_string(s.dim()));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (!(r[j] > s[i][j])) {
        throw ReferencePointError("reference point is not strictly dominated by point " +
                                  std::to_string(i) + " on axis " + std::to_string(j));
      }
    }
  }
}

double hv_exact(const SolutionSet& s, const ReferencePoint& r) {
  check_reference_dominated(s, r);
  return wfg_hv(to_rows(s), r.coords());
}

double hv_exact_2d(const SolutionSet& s, const ReferencePoint& r) {
  if (s.dim() != 2) {
    throw DimensionMismatchError("hv_exact_2d: set dimension is " + std::to_string(s.dim()) +
                                 ", expected 2");
  }
  check_reference_dominated(s, r);
  return sweep_2d(to_rows(s), r.coords());
}

double hv_oracle_incl_excl(std::span<const Point> points, const ReferencePoint& r) {
  if (points.empty()) {
    throw InvalidArgumentError("hv_oracle_incl_excl: empty input");
  }
  if (points.size() > 20) {
    throw InvalidArgumentError("hv_oracle_incl_excl: at most 20 points supported, got " +
                               std::to_string(points.size()));
  }
  const std::size_t m = r.dim();
  for (const Point& p : points) {
    if (p.dim() != m) {
      throw DimensionMismatchError("hv_oracle_incl_excl: point dimension mismatch");
    }
  }
  const std::uint32_t subsets = 1u << points.size();
  double hv = 0.0;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    double term = 1.0;
    for (std::size_t j = 0; j < m && term > 0.0; ++j) {
      double worst = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (mask & (1u << i)) {
          worst = std::max(worst, points[i][j]);
        }
      }
      term *= std::max(0.0, r[j] - worst);
    }
    hv += (std::popcount(mask) % 2 == 1) ? term : -term;
  }
  return hv;
}

double hv_oracle_incl_excl(const SolutionSet& s, const ReferencePoint& r) {
  check_reference_dominated(s, r);
  return hv_oracle_incl_excl(std::span<const Point>(s.points()), r);
}

}  // namespace hvkit
