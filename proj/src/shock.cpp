#include "cutoffwave/shock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cutoffwave/errors.hpp"
#include "cutoffwave/root_finding.hpp"

namespace cutoffwave {

namespace {

// One-sided value sequence of a profile in knot order; single-peaked means
// this sequence rises to the peak and then falls.
bool single_peaked(const Profile& p) {
  std::vector<double> vs;
  for (const Knot& k : p.knots()) {
    vs.push_back(k.left);
    vs.push_back(k.right);
  }
  std::size_t i = 1;
  while (i < vs.size() && vs[i] >= vs[i - 1]) ++i;
  while (i < vs.size() && vs[i] <= vs[i - 1]) ++i;
  return i == vs.size();
}

}  // namespace

Scenario make_mirror_scenario(Profile packet, double phi_cut, double tol_event,
                              double tol_root) {
  Scenario s;
  s.phi_cut = phi_cut;
  s.movers.minus = packet.reflected();
  s.movers.plus = std::move(packet);
  s.tol_event = tol_event;
  s.tol_root = tol_root;
  return s;
}

void validate_scenario(const Scenario& s) {
  if (!(s.phi_cut > 0.0)) throw ScenarioError("cutoff must be positive");
  if (!s.symmetric)
    throw ScenarioError("only mirror-symmetric scenarios are supported");
  if (s.movers.plus.empty() != s.movers.minus.empty())
    throw ScenarioError("movers must be mirror images of one another");
  if (s.movers.plus.empty()) return;
  if (sup_distance(s.movers.plus.reflected(), s.movers.minus) >
      1e-12 * s.phi_cut)
    throw ScenarioError("movers must be mirror images of one another");
  for (const Knot& k : s.movers.plus.knots())
    if (k.left < 0.0 || k.right < 0.0)
      throw ScenarioError("packet values must be nonnegative");
  if (!single_peaked(s.movers.plus))
    throw ScenarioError("packet must be single-peaked");
  const double peak = s.movers.plus.max_value().value;
  const double guard = 4.0 * s.phi_cut * std::max(s.tol_event, 1e-15);
  if (peak >= s.phi_cut - guard)
    throw ScenarioError(
        "packet amplitude too close to the cutoff; a lone mover may not "
        "reach it");
}

double volume_balance(const Profile& inflow, const Profile& outflow,
                      double phi_cut, double advance, double elapsed) {
  if (advance < 0.0 || elapsed < 0.0)
    throw std::invalid_argument("volume_balance: negative arguments");
  double swallowed = inflow.integral(0.0, advance + elapsed);
  if (advance > elapsed)
    swallowed += outflow.integral(0.0, advance - elapsed);
  return advance * phi_cut - swallowed;
}

double solve_displacement(const Profile& inflow, const Profile& outflow,
                          double phi_cut, double elapsed, double tol_root) {
  if (elapsed < 0.0)
    throw std::invalid_argument("solve_displacement: negative elapsed time");
  if (elapsed == 0.0) return 0.0;
  const double hi = (inflow.integral() + outflow.integral()) / phi_cut + 1.0;
  return find_root(
      [&](double adv) {
        return volume_balance(inflow, outflow, phi_cut, adv, elapsed);
      },
      0.0, hi, tol_root);
}

double shock_speed(const Profile& inflow, const Profile& outflow,
                   double phi_cut, double elapsed, double tol_root) {
  const double adv =
      solve_displacement(inflow, outflow, phi_cut, elapsed, tol_root);
  const double in = inflow.evaluate(adv + elapsed);
  const double out =
      adv > elapsed ? outflow.evaluate(adv - elapsed) : outflow.evaluate(0.0);
  return (in - out) / (phi_cut - in - out);
}

DecayOnset decay_onset(const Profile& inflow, const Profile& outflow,
                       double phi_cut, double tol_root) {
  const double half = 0.5 * phi_cut;
  // Ulp-scale slack: amplitudes within rounding of half the cutoff decay
  // instantly (the flattened outputs overshoot half by an ulp at the tail
  // junction and must re-enter as such).
  const double slack =
      64.0 * std::numeric_limits<double>::epsilon() * phi_cut;
  if (inflow.evaluate(0.0, Side::Right) <= half + slack) return {0.0, 0.0};
  // The incoming amplitude at the front is inflow(advance + elapsed); it
  // falls through phi_cut/2 exactly once, at the last half-cutoff crossing
  // of the inflow profile. Since advance >= 0, the onset elapsed time is
  // bracketed by that crossing.
  const auto crossing = inflow.level_crossing_max(half);
  if (!crossing || !(*crossing > 0.0))
    throw std::runtime_error("decay_onset: inflow has no half-cutoff edge");
  auto at_or_below_half = [&](double elapsed) {
    const double adv =
        solve_displacement(inflow, outflow, phi_cut, elapsed, tol_root);
    return inflow.evaluate(adv + elapsed) <= half;
  };
  // The amplitude seen at the front falls through phi_cut/2 once, but may
  // sit exactly at it over a whole stretch (packets with a flat shelf at
  // half the cutoff). Growth ends at the earliest such moment, so bisect the
  // boundary of the predicate rather than a signed residual.
  double lo = 0.0, hi = *crossing;
  if (!at_or_below_half(hi))
    throw std::runtime_error("decay_onset: amplitude never falls to half");
  while (hi - lo > tol_root) {
    const double mid = 0.5 * (lo + hi);
    (at_or_below_half(mid) ? hi : lo) = mid;
  }
  return {hi, solve_displacement(inflow, outflow, phi_cut, hi, tol_root)};
}

std::pair<Profile, Profile> plateau_decay(double half_width, double t_decay,
                                          double phi_cut) {
  if (half_width < 0.0)
    throw std::invalid_argument("plateau_decay: negative half-width");
  Profile right =
      Profile::box(-half_width - t_decay, half_width - t_decay, 0.5 * phi_cut);
  Profile left = right.reflected();
  return {std::move(right), std::move(left)};
}

double FieldState::value(double x, Side side) const {
  if (plateau && x >= plateau->lo && x <= plateau->hi) return phi_cut;
  return dalembert_eval(movers, x, t, side);
}

Profile FieldState::profile() const {
  Profile free = snapshot_profile(movers, t);
  if (!plateau) return free;
  double far = std::max(std::abs(plateau->lo), std::abs(plateau->hi));
  if (!free.empty())
    far = std::max({far, std::abs(free.min_x()), std::abs(free.max_x())});
  far += 1.0;
  Profile outside = superpose(free.restricted(-far, plateau->lo),
                              free.restricted(plateau->hi, far));
  return superpose(outside, Profile::box(plateau->lo, plateau->hi, phi_cut));
}

CollisionEngine::CollisionEngine(Scenario s) : scenario_(std::move(s)) {
  validate_scenario(scenario_);
  contact_ = first_contact(scenario_.movers, scenario_.phi_cut,
                           scenario_.tol_event);
  final_ = scenario_.movers;
  if (!contact_) return;

  const double skew = contact_->x_left + contact_->x_right;
  if (std::abs(skew) > 1e-8 * std::max(1.0, std::abs(contact_->x_right)))
    throw ScenarioError("contact set not centered; scenario not symmetric");
  contact_edge_ = 0.5 * (contact_->x_right - contact_->x_left);

  // Freeze the incoming / outgoing amplitudes seen from the shock's birth
  // position at contact time. Content at negative offsets is already part
  // of the plateau and plays no further role.
  const double t0 = contact_->t;
  auto beyond_edge = [&](const Profile& p, double shift_amount) {
    Profile q = p.shifted(shift_amount);
    if (q.empty() || q.max_x() <= 0.0) return Profile();
    return q.restricted(0.0, q.max_x() + 1.0);
  };
  inflow_ = beyond_edge(scenario_.movers.minus, -(contact_edge_ + t0));
  outflow_ = beyond_edge(scenario_.movers.plus, -(contact_edge_ - t0));

  onset_ = decay_onset(inflow_, outflow_, scenario_.phi_cut,
                       scenario_.tol_root);
  degenerate_ = onset_.elapsed == 0.0;
  half_width_ = contact_edge_ + onset_.advance;
  t_decay_ = t0 + onset_.elapsed;
  t_annihilation_ = t_decay_ + half_width_;

  if (degenerate_) {
    // Growth never happens; the flat stretch the decay would produce is
    // exactly the half-cutoff stretch the movers already carry, so the
    // evolution is the identity map on the movers.
    final_ = scenario_.movers;
    return;
  }

  // Geometric construction of the outgoing packet: the trailing tail up to
  // the capture threshold of the far shock survives untouched, the captured
  // middle is released as a half-cutoff step, and the head that outran this
  // shock survives beyond it. The tail junction sits exactly where the
  // packet first reaches half the cutoff; the head junction is the largest
  // co-moving coordinate the front ever reaches. (On a packet with a shelf
  // exactly at half the cutoff the two stretches overlap; flattening the
  // shelf is a no-op, so using the first crossing stays exact.)
  const double flat_lo =
      *scenario_.movers.plus.level_crossing_min(0.5 * scenario_.phi_cut);
  const double flat_hi = half_width_ - t_decay_;
  final_.plus = scenario_.movers.plus.flattened(flat_lo, flat_hi,
                                                0.5 * scenario_.phi_cut);
  final_.minus = final_.plus.reflected();

  const double drift =
      std::abs(final_.plus.integral() - scenario_.movers.plus.integral());
  if (drift > 1e-9 * std::max(1.0, scenario_.movers.plus.integral()))
    throw std::runtime_error(
        "internal: outgoing state does not conserve the field integral");
}

std::optional<double> CollisionEngine::contact_time() const {
  if (!contact_) return std::nullopt;
  return contact_->t;
}

std::optional<double> CollisionEngine::decay_time() const {
  if (!contact_ || degenerate_) return std::nullopt;
  return t_decay_;
}

std::optional<double> CollisionEngine::annihilation_time() const {
  if (!contact_ || degenerate_) return std::nullopt;
  return t_annihilation_;
}

std::optional<double> CollisionEngine::plateau_half_width() const {
  if (!contact_ || degenerate_) return std::nullopt;
  return half_width_;
}

double CollisionEngine::displacement(double elapsed) const {
  return solve_displacement(inflow_, outflow_, scenario_.phi_cut, elapsed,
                            scenario_.tol_root);
}

double CollisionEngine::speed(double elapsed) const {
  return shock_speed(inflow_, outflow_, scenario_.phi_cut, elapsed,
                     scenario_.tol_root);
}

std::optional<double> CollisionEngine::shock_position(double t) const {
  // A degenerate contact never forms a front: nothing is absorbed and the
  // movers pass through freely.
  if (!contact_ || degenerate_ || t < contact_->t || t > t_annihilation_)
    return std::nullopt;
  if (t <= t_decay_) return contact_edge_ + displacement(t - contact_->t);
  return half_width_ - (t - t_decay_);
}

Phase CollisionEngine::phase_at(double t) const {
  if (!contact_ || t <= contact_->t) return Phase::Free;
  if (t < t_decay_) return Phase::Growth;
  return Phase::Decayed;
}

FieldState CollisionEngine::state(double t) const {
  FieldState st;
  st.t = t;
  st.phi_cut = scenario_.phi_cut;
  st.phase = phase_at(t);
  switch (st.phase) {
    case Phase::Free:
      st.movers = scenario_.movers;
      break;
    case Phase::Growth: {
      st.movers = scenario_.movers;
      const double edge = contact_edge_ + displacement(t - contact_->t);
      st.plateau = Interval{-edge, edge};
      break;
    }
    case Phase::Decayed:
      st.movers = final_;
      break;
  }
  return st;
}

Profile CollisionEngine::field_profile(double t) const {
  return state(t).profile();
}

double CollisionEngine::field_value(double t, double x, Side side) const {
  return state(t).value(x, side);
}

ShockTrajectory CollisionEngine::trajectory(
    std::span<const double> times) const {
  ShockTrajectory tr;
  tr.contact = contact_;
  if (contact_ && !degenerate_) {
    tr.decay = DecayEvent{t_decay_, half_width_};
    tr.annihilation = t_annihilation_;
  }
  tr.samples.reserve(times.size());
  for (double t : times)
    tr.samples.push_back({t, phase_at(t), shock_position(t)});
  return tr;
}

}  // namespace cutoffwave
