#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cutoffwave/shock.hpp"

namespace cutoffwave {

// Property checks tying the engine to the claims it must honor:
// conservation of the field integral, the hard ceiling, support growth no
// faster than light, and the merging of distinct pasts into one future.

// Max over the sampled times of |total integral - initial total|; the
// plateau counts as cutoff times width.
double check_conservation(const CollisionEngine& engine,
                          std::span<const double> times);

// Max over the sampled times of the excess of the field over the cutoff
// (exact profile maximum, not a point sample).
double check_bound(const CollisionEngine& engine,
                   std::span<const double> times);

struct TimePair {
  double t1 = 0.0;
  double t2 = 0.0;
};

// For snapshots phi(t1), phi(t2) with t1 < t2, the support at t2 must lie
// inside the support at t1 dilated by t2 - t1. Returns the worst excess.
// Support means |phi| > floor.
double check_causality(std::span<const std::pair<double, Profile>> snapshots,
                       double floor = 1e-12);
double check_causality(const CollisionEngine& engine,
                       std::span<const TimePair> pairs, double floor = 1e-12);

// Runs the scenario and the scenario re-seeded with its own outgoing movers.
// merge_distance: distance between the two outgoing states ("two pasts, one
// future"); fixed_point_distance: distance between final(final(s)) and
// final(s). Distances are sup norms off jump discontinuities.
struct NonunitarityReport {
  double merge_distance = 0.0;
  double fixed_point_distance = 0.0;
};
NonunitarityReport nonunitarity_report(const Scenario& s);

struct ValidationTolerances {
  double conservation = 1e-9;
  double bound = 1e-9;
  double causality = 1e-12;
  double merge = 1e-9;
  double fixed_point = 1e-9;
};

struct ValidationReport {
  double conservation_residual = 0.0;
  double bound_violation = 0.0;
  double causality_residual = 0.0;
  double merge_distance = 0.0;
  double fixed_point_distance = 0.0;

  bool passes(const ValidationTolerances& tol) const {
    return conservation_residual <= tol.conservation &&
           bound_violation <= tol.bound &&
           causality_residual <= tol.causality &&
           merge_distance <= tol.merge &&
           fixed_point_distance <= tol.fixed_point;
  }
};

// Full battery with deterministic built-in sampling: 64 conservation/bound
// times and 50 causality pairs spanning every regime of the scenario.
ValidationReport validate_all(const Scenario& s);

}  // namespace cutoffwave
