#include "cutoffwave/validators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cutoffwave {

double check_conservation(const CollisionEngine& engine,
                          std::span<const double> times) {
  const MoverPair& m = engine.scenario().movers;
  const double initial = m.plus.integral() + m.minus.integral();
  double worst = 0.0;
  for (double t : times) {
    const double total = engine.field_profile(t).integral();
    worst = std::max(worst, std::abs(total - initial));
  }
  return worst;
}

double check_bound(const CollisionEngine& engine,
                   std::span<const double> times) {
  const double phi = engine.scenario().phi_cut;
  double worst = 0.0;
  for (double t : times) {
    const double peak = engine.field_profile(t).max_value().value;
    worst = std::max(worst, std::max(0.0, peak - phi));
  }
  return worst;
}

double check_causality(std::span<const std::pair<double, Profile>> snapshots,
                       double floor) {
  double worst = 0.0;
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    for (std::size_t j = i + 1; j < snapshots.size(); ++j) {
      const auto& [t1, p1] = snapshots[i];
      const auto& [t2, p2] = snapshots[j];
      if (!(t1 < t2)) continue;
      const auto s2 = p2.support(floor);
      if (!s2) continue;  // empty field cannot violate anything
      const auto s1 = p1.support(floor);
      if (!s1) {
        worst = std::max(worst, s2->width());
        continue;
      }
      const double dt = t2 - t1;
      worst = std::max(worst, s2->hi - (s1->hi + dt));
      worst = std::max(worst, (s1->lo - dt) - s2->lo);
    }
  }
  return std::max(worst, 0.0);
}

double check_causality(const CollisionEngine& engine,
                       std::span<const TimePair> pairs, double floor) {
  double worst = 0.0;
  for (const TimePair& pair : pairs) {
    std::pair<double, Profile> snaps[2] = {
        {pair.t1, engine.field_profile(pair.t1)},
        {pair.t2, engine.field_profile(pair.t2)}};
    worst = std::max(worst, check_causality(snaps, floor));
  }
  return worst;
}

namespace {

double pair_distance(const MoverPair& a, const MoverPair& b) {
  return std::max(sup_distance_off_jumps(a.plus, b.plus),
                  sup_distance_off_jumps(a.minus, b.minus));
}

}  // namespace

NonunitarityReport nonunitarity_report(const Scenario& s) {
  CollisionEngine first(s);
  Scenario reseeded = s;
  reseeded.movers = first.final_movers();
  CollisionEngine second(reseeded);
  NonunitarityReport r;
  r.merge_distance = pair_distance(first.final_movers(), second.final_movers());
  r.fixed_point_distance =
      pair_distance(second.final_movers(), first.final_movers());
  return r;
}

ValidationReport validate_all(const Scenario& s) {
  CollisionEngine engine(s);

  // Time window spanning every regime: from well before contact to after
  // annihilation (or one support width of free flight when no contact).
  double t_lo = -1.0, t_hi = 1.0;
  if (!s.movers.plus.empty()) {
    const double span = s.movers.plus.max_x() - s.movers.plus.min_x();
    t_lo = -span;
    t_hi = span;
    if (engine.contact()) {
      t_lo = engine.contact()->t - 0.5 * span;
      t_hi = engine.annihilation_time().value_or(engine.contact()->t) +
             1.5 * span;
    }
  }
  std::vector<double> times(64);
  for (std::size_t i = 0; i < times.size(); ++i)
    times[i] = t_lo + (t_hi - t_lo) * static_cast<double>(i) /
                          static_cast<double>(times.size() - 1);

  std::vector<TimePair> pairs;
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> dist(t_lo, t_hi);
  while (pairs.size() < 50) {
    double a = dist(rng), b = dist(rng);
    if (a == b) continue;
    pairs.push_back({std::min(a, b), std::max(a, b)});
  }
  if (engine.contact() && engine.decay_time()) {
    // Pairs straddling the superluminal-growth epoch.
    const double tc = engine.contact()->t;
    const double td = *engine.decay_time();
    pairs.push_back({tc - 0.1, 0.5 * (tc + td)});
    pairs.push_back({0.5 * (tc + td), td + 0.1});
    pairs.push_back({tc, td});
  }

  ValidationReport r;
  r.conservation_residual = check_conservation(engine, times);
  r.bound_violation = check_bound(engine, times);
  r.causality_residual = check_causality(engine, pairs);
  const NonunitarityReport nu = nonunitarity_report(s);
  r.merge_distance = nu.merge_distance;
  r.fixed_point_distance = nu.fixed_point_distance;
  return r;
}

}  // namespace cutoffwave
