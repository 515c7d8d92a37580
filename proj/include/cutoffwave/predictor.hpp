#pragma once

#include <optional>

#include "cutoffwave/profile.hpp"

namespace cutoffwave {

// Direct map from an admissible incoming packet to the outgoing one, with no
// collision simulation: the packet is flattened to half the cutoff between
// flat_begin (its first half-cutoff crossing) and flat_end (placed so the
// flattening conserves the integral). Exists as an independent check on the
// event-driven engine.
struct PredictorResult {
  std::optional<double> flat_begin;  // absent when the map is the identity
  std::optional<double> flat_end;
  Profile final;
};

// Requires a continuous, single-peaked packet with peak below phi_cut.
// A peak at or below phi_cut/2 yields the identity.
// flat_end solves  integral(f, flat_begin, flat_end)
//                    == phi_cut/2 * (flat_end - flat_begin)
// segment-by-segment (exact quadratics); it may land beyond the support, in
// which case the outgoing packet ends in a jump to zero.
PredictorResult predict_final(const Profile& packet, double phi_cut);

// Same flat_end by bracketed root-finding on the area defect; retained as a
// cross-check of the closed-form path.
double predict_flat_end_bisection(const Profile& packet, double phi_cut,
                                  double tol_root = 1e-12);

}  // namespace cutoffwave
