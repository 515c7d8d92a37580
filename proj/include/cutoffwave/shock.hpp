#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cutoffwave/free_evolution.hpp"
#include "cutoffwave/profile.hpp"

namespace cutoffwave {

// Full problem statement for one collision. The movers live in the t = 0
// frame; the pair must be mirror symmetric (minus == reflect(plus)) and the
// packet single-peaked with amplitude strictly below the cutoff.
struct Scenario {
  double phi_cut = 1.0;
  MoverPair movers;
  double tol_event = 1e-12;
  double tol_root = 1e-12;
  bool symmetric = true;
};

// Builds the mirror pair from one packet.
Scenario make_mirror_scenario(Profile packet, double phi_cut = 1.0,
                              double tol_event = 1e-12,
                              double tol_root = 1e-12);

// Throws ScenarioError when the scenario lies outside the supported class.
void validate_scenario(const Scenario& s);

// Defect of the plateau-growth balance: the plateau has advanced by
// `advance` in a time `elapsed` since the shock formed, and the advance must
// equal the wave volume swallowed from the incoming side (which keeps
// streaming past the front) plus the volume captured from the outgoing side
// (which the front only reaches while superluminal). `inflow`/`outflow` are
// the mover amplitudes at contact time, parametrized by distance beyond the
// shock's birth position. Returns
//   advance * phi_cut - integral(inflow, 0, advance + elapsed)
//                     - integral(outflow, 0, max(0, advance - elapsed)).
double volume_balance(const Profile& inflow, const Profile& outflow,
                      double phi_cut, double advance, double elapsed);

// Unique self-consistent advance at the given elapsed time (bracketed root
// of volume_balance in `advance`).
double solve_displacement(const Profile& inflow, const Profile& outflow,
                          double phi_cut, double elapsed,
                          double tol_root = 1e-12);

// Front velocity implied by differentiating the balance,
//   (inflow(adv+el) - outflow(adv-el)) / (phi_cut - inflow - outflow).
// Greater than one exactly while the incoming amplitude exceeds phi_cut/2.
double shock_speed(const Profile& inflow, const Profile& outflow,
                   double phi_cut, double elapsed, double tol_root = 1e-12);

// Moment at which the incoming amplitude at the front has fallen to
// phi_cut/2 (equivalently the front has slowed to unit speed) and the
// plateau stops growing. An inflow that never exceeds phi_cut/2 decays
// instantly: {0, 0}.
struct DecayOnset {
  double elapsed = 0.0;
  double advance = 0.0;
};
DecayOnset decay_onset(const Profile& inflow, const Profile& outflow,
                       double phi_cut, double tol_root = 1e-12);

// Splits a frozen plateau [-half_width, half_width] released at t_decay into
// equal half-cutoff steps, returned as (right mover, left mover) profiles in
// the t = 0 frame.
std::pair<Profile, Profile> plateau_decay(double half_width, double t_decay,
                                          double phi_cut);

enum class Phase { Free, Growth, Decayed };

// Field at one instant: free content plus an optional frozen interval at the
// cutoff. Outside the plateau the field is the d'Alembert sum of the movers.
struct FieldState {
  double t = 0.0;
  Phase phase = Phase::Free;
  MoverPair movers;
  std::optional<Interval> plateau;
  double phi_cut = 1.0;

  double value(double x, Side side = Side::Right) const;
  Profile profile() const;
};

struct DecayEvent {
  double t = 0.0;
  double half_width = 0.0;  // plateau half-width when growth stops
};

struct TrajectorySample {
  double t = 0.0;
  Phase phase = Phase::Free;
  std::optional<double> shock_right;  // left shock is the mirror image
};

struct ShockTrajectory {
  std::optional<ContactEvent> contact;
  std::optional<DecayEvent> decay;
  std::optional<double> annihilation;
  std::vector<TrajectorySample> samples;
};

// Event-driven exact evolution of one mirror-symmetric collision. All event
// data is computed once at construction; the object is immutable afterwards
// and safe to query concurrently.
class CollisionEngine {
 public:
  explicit CollisionEngine(Scenario s);

  const Scenario& scenario() const { return scenario_; }
  const std::optional<ContactEvent>& contact() const { return contact_; }

  // Instant decay: the incoming amplitude is already at or below half the
  // cutoff when contact occurs, so the evolution is the identity map.
  bool degenerate() const { return degenerate_; }

  std::optional<double> contact_time() const;
  std::optional<double> decay_time() const;
  std::optional<double> annihilation_time() const;
  // Plateau half-width at decay onset.
  std::optional<double> plateau_half_width() const;

  const Profile& inflow() const { return inflow_; }
  const Profile& outflow() const { return outflow_; }

  // Plateau advance a time `elapsed` after contact.
  double displacement(double elapsed) const;
  // Right shock position, if a shock exists at time t.
  std::optional<double> shock_position(double t) const;
  double speed(double elapsed) const;

  Phase phase_at(double t) const;
  FieldState state(double t) const;
  Profile field_profile(double t) const;
  double field_value(double t, double x, Side side = Side::Right) const;

  const MoverPair& final_movers() const { return final_; }

  ShockTrajectory trajectory(std::span<const double> times) const;

 private:
  Scenario scenario_;
  std::optional<ContactEvent> contact_;
  double contact_edge_ = 0.0;  // symmetrized right edge of the contact set
  Profile inflow_;
  Profile outflow_;
  DecayOnset onset_;
  bool degenerate_ = true;
  double half_width_ = 0.0;  // plateau half-width at decay onset
  double t_decay_ = 0.0;
  double t_annihilation_ = 0.0;
  MoverPair final_;
};

}  // namespace cutoffwave
