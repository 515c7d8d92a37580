#include "cutoffwave/predictor.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cutoffwave/errors.hpp"
#include "cutoffwave/root_finding.hpp"

namespace cutoffwave {

namespace {

// Peaks within rounding of half the cutoff count as trivial: flattening at
// that level is a no-op, and the map's own outputs may overshoot half by an
// ulp at the tail junction.
double half_cutoff_ceiling(double phi_cut) {
  return 0.5 * phi_cut +
         64.0 * std::numeric_limits<double>::epsilon() * phi_cut;
}

// Continuity is only demanded when the map is nontrivial; the identity
// branch must accept the map's own (jump-carrying) outputs.
void validate_packet(const Profile& packet, double phi_cut) {
  std::vector<double> vs;
  for (const Knot& k : packet.knots()) {
    if (k.left < 0.0 || k.right < 0.0)
      throw ScenarioError("packet values must be nonnegative");
    vs.push_back(k.left);
    vs.push_back(k.right);
  }
  std::size_t i = 1;
  while (i < vs.size() && vs[i] >= vs[i - 1]) ++i;
  while (i < vs.size() && vs[i] <= vs[i - 1]) ++i;
  if (i != vs.size()) throw ScenarioError("packet must be single-peaked");
  const double peak = packet.max_value().value;
  if (peak >= phi_cut)
    throw ScenarioError("packet amplitude reaches the field cutoff");
  if (peak <= half_cutoff_ceiling(phi_cut)) return;
  for (const Knot& k : packet.knots())
    if (k.left != k.right)
      throw ScenarioError("predictor requires a continuous packet");
}

// Area defect accumulated from flat_begin:
//   D(x) = integral(f, flat_begin, x) - phi_cut/2 * (x - flat_begin).
// D vanishes at flat_begin, grows while f exceeds phi_cut/2 and decreases
// once f has dropped below it; flat_end is its unique return to zero beyond
// the last half-cutoff crossing.
double solve_flat_end(const Profile& packet, double phi_cut,
                      double flat_begin) {
  const double half = 0.5 * phi_cut;
  const double fall = *packet.level_crossing_max(half);
  double d = packet.integral(flat_begin, fall) - half * (fall - flat_begin);
  const auto& ks = packet.knots();
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    const double lo = std::max(fall, ks[i].x);
    const double hi = ks[i + 1].x;
    if (lo >= hi) continue;
    const double v0 = packet.evaluate(lo, Side::Right);
    const double v1 = ks[i + 1].left;
    const double slope = (v1 - v0) / (hi - lo);
    // D(lo + u) = d + (v0 - half) u + slope u^2 / 2 on [0, hi - lo].
    const double a = 0.5 * slope;
    const double b = v0 - half;
    double root = -1.0;
    if (a == 0.0) {
      if (b < 0.0) root = -d / b;
    } else {
      const double disc = b * b - 4.0 * a * d;
      if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        // Smallest nonnegative root of a u^2 + b u + d = 0.
        const double r1 = (-b - sq) / (2.0 * a);
        const double r2 = (-b + sq) / (2.0 * a);
        const double lo_r = std::min(r1, r2);
        const double hi_r = std::max(r1, r2);
        if (lo_r >= 0.0)
          root = lo_r;
        else if (hi_r >= 0.0)
          root = hi_r;
      }
    }
    if (root >= 0.0 && root <= hi - lo) return lo + root;
    d += packet.integral(lo, hi) - half * (hi - lo);
  }
  // Defect still positive at the end of the support: beyond it the packet is
  // zero and D decreases linearly at rate phi_cut/2.
  return packet.max_x() + d / half;
}

}  // namespace

PredictorResult predict_final(const Profile& packet, double phi_cut) {
  validate_packet(packet, phi_cut);
  PredictorResult r;
  const double half = 0.5 * phi_cut;
  if (packet.max_value().value <= half_cutoff_ceiling(phi_cut)) {
    r.final = packet;
    return r;
  }
  const double flat_begin = *packet.level_crossing_min(half);
  const double flat_end = solve_flat_end(packet, phi_cut, flat_begin);
  r.flat_begin = flat_begin;
  r.flat_end = flat_end;
  r.final = packet.flattened(flat_begin, flat_end, half);
  return r;
}

double predict_flat_end_bisection(const Profile& packet, double phi_cut,
                                  double tol_root) {
  validate_packet(packet, phi_cut);
  const double half = 0.5 * phi_cut;
  if (packet.max_value().value <= half_cutoff_ceiling(phi_cut))
    throw std::invalid_argument("identity map has no flat stretch");
  const double flat_begin = *packet.level_crossing_min(half);
  const double fall = *packet.level_crossing_max(half);
  auto defect = [&](double x) {
    return packet.integral(flat_begin, x) - half * (x - flat_begin);
  };
  double hi = packet.max_x();
  const double tail = defect(hi);
  hi += std::max(0.0, tail) / half + 1.0;
  return find_root(defect, fall + tol_root, hi, tol_root);
}

}  // namespace cutoffwave
