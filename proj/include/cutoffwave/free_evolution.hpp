#pragma once

#include <optional>

#include "cutoffwave/profile.hpp"

namespace cutoffwave {

// Right- and left-moving content in the t = 0 frame. The field of a freely
// evolving pair is plus(x - t) + minus(x + t).
struct MoverPair {
  Profile plus;
  Profile minus;
};

double dalembert_eval(const MoverPair& m, double x, double t,
                      Side side = Side::Right);

// Field of the pair at time t as a profile in x.
Profile snapshot_profile(const MoverPair& m, double t);

// First instant at which the superposed field reaches the cutoff, together
// with the set of positions where it does. Triangular-style packets reach
// the cutoff on a whole interval at once; a single-point contact is stored
// as a zero-width interval.
struct ContactEvent {
  double t = 0.0;
  double x_left = 0.0;
  double x_right = 0.0;
};

// Scans knot-collision times (between which the superposed maximum is a
// convex, piecewise-linear function of t) and root-finds the first crossing
// of the cutoff. Returns nullopt when the field stays below the cutoff for
// all times. Throws ScenarioError if a mover itself reaches the cutoff or
// the contact set is disconnected (outside the supported class).
std::optional<ContactEvent> first_contact(const MoverPair& m, double phi_cut,
                                          double tol_event = 1e-12);

}  // namespace cutoffwave
