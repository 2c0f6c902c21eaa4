#pragma once

#include <vector>

#include "hvkit/hvnet.hpp"
#include "hvkit/point.hpp"
#include "hvkit/solution_set.hpp"

namespace hvkit {

enum class Orientation { minimize, maximize };

/// An (S, r) pair reduced to the canonical frame: the set shifted so each
/// axis minimum is zero and scaled so the reference point becomes (1, ..., 1).
/// HV(S, r) = scale * HV(canonical, unit reference).
struct NormalizedProblem {
  SolutionSet canonical;           ///< lives in [0,1)^m, touches 0 on every axis
  double scale = 1.0;              ///< c
  std::vector<double> shift;       ///< beta, applied after any orientation flip
  std::vector<double> axis_scale;  ///< alpha, 1 / (r_j + beta_j)
};

/// Shift-then-scale reduction. Maximization inputs are negated first, so the
/// rest of the pipeline only ever sees minimization. Requires r strictly
/// dominated by every point (checked after the flip).
NormalizedProblem normalize(const SolutionSet& s, const ReferencePoint& r,
                            Orientation orientation = Orientation::minimize);

/// Normalize, estimate the canonical hypervolume with any estimator, and
/// undo the scaling.
template <typename Estimator>
double approx_hv_with(Estimator&& estimate, const SolutionSet& s, const ReferencePoint& r,
                      Orientation orientation = Orientation::minimize) {
  const NormalizedProblem np = normalize(s, r, orientation);
  return np.scale * estimate(np.canonical);
}

/// Hypervolume of an arbitrary (S, r) pair approximated by an HV-Net model:
/// scale * predict(model, canonical).
double approx_hv_any(const HvNetModel& model, const SolutionSet& s, const ReferencePoint& r,
                     Orientation orientation = Orientation::minimize);

}  // namespace hvkit
