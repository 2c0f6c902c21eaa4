#include "hvkit/transform.hpp"

#include <string>
#include <utility>

#include "hvkit/errors.hpp"
#include "hvkit/exact.hpp"

namespace hvkit {

NormalizedProblem normalize(const SolutionSet& s, const ReferencePoint& r,
                            Orientation orientation) {
  if (r.dim() != s.dim()) {
    throw DimensionMismatchError("normalize: reference dimension " + std::to_string(r.dim()) +
                                 ", set dimension " + std::to_string(s.dim()));
  }
  const std::size_t m = s.dim();

  // Maximization reduces to minimization by negating both sides.
  std::vector<Point> oriented;
  oriented.reserve(s.size());
  std::vector<double> ref_coords = r.coords();
  if (orientation == Orientation::maximize) {
    for (const Point& p : s) {
      std::vector<double> c = p.coords();
      for (double& v : c) {
        v = -v;
      }
      oriented.emplace_back(std::move(c));
    }
    for (double& v : ref_coords) {
      v = -v;
    }
  } else {
    oriented = s.points();
  }
  const SolutionSet flipped(std::move(oriented));
  const ReferencePoint ref(std::move(ref_coords));
  check_reference_dominated(flipped, ref);

  const std::vector<double> ideal = flipped.ideal_point();
  std::vector<double> shift(m);
  std::vector<double> axis_scale(m);
  double scale = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    shift[j] = -ideal[j];
    const double extent = ref[j] + shift[j];
    if (!(extent > 0.0)) {
      throw ReferencePointError("normalize: degenerate axis " + std::to_string(j) +
                                " (reference equals the axis minimum)");
    }
    axis_scale[j] = 1.0 / extent;
    scale *= extent;
  }

  std::vector<Point> canonical;
  canonical.reserve(flipped.size());
  for (const Point& p : flipped) {
    std::vector<double> c(m);
    for (std::size_t j = 0; j < m; ++j) {
      c[j] = (p[j] + shift[j]) * axis_scale[j];
    }
    canonical.emplace_back(std::move(c));
  }

  return NormalizedProblem{SolutionSet(std::move(canonical)), scale, std::move(shift),
                           std::move(axis_scale)};
}

double approx_hv_any(const HvNetModel& model, const SolutionSet& s, const ReferencePoint& r,
                     Orientation orientation) {
  return approx_hv_with(
      [&model](const SolutionSet& canonical) { return predict(model, canonical); }, s, r,
      orientation);
}

}  // namespace hvkit
