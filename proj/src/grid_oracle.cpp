#include "cutoffwave/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cutoffwave/errors.hpp"

namespace cutoffwave {

namespace {

struct GridState {
  std::vector<double> r, l;
  // Inclusive cell-index plateau; absent outside the growth phase.
  bool has_plateau = false;
  std::size_t p_lo = 0, p_hi = 0;
  double absorbed = 0.0;  // area swallowed by the plateau, seed included
  Phase phase = Phase::Free;
};

}  // namespace

GridResult grid_simulate(const Scenario& s, const GridParams& p,
                         std::span<const double> sample_times) {
  validate_scenario(s);
  if (!(p.h > 0.0) || !(p.half_width > 0.0))
    throw std::invalid_argument("grid_simulate: bad grid parameters");

  const double phi = s.phi_cut;
  const double h = p.h;
  const auto n = static_cast<std::size_t>(std::llround(2.0 * p.half_width / h));
  if (n < 8) throw std::invalid_argument("grid_simulate: domain too coarse");

  // Start before the supports can overlap; requested sample times are
  // served by the nearest step (quantization of up to half a step is part
  // of this oracle's first-order error budget).
  double t_last = p.t_end;
  double t_first = 0.0;
  for (double t : sample_times) {
    t_last = std::max(t_last, t);
    t_first = std::min(t_first, t);
  }
  const double t0 =
      std::min(t_first, s.movers.plus.empty() ? 0.0 : -s.movers.plus.max_x()) -
      2.0 * h;
  const auto steps = static_cast<std::size_t>(std::ceil((t_last - t0) / h));

  auto center = [&](std::size_t i) {
    return -p.half_width + (static_cast<double>(i) + 0.5) * h;
  };

  GridState g;
  g.r.resize(n);
  g.l.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.r[i] = s.movers.plus.evaluate(center(i) - t0);
    g.l[i] = s.movers.minus.evaluate(center(i) + t0);
  }

  // Step indices at which to record snapshots.
  std::vector<std::pair<std::size_t, std::size_t>> wanted;  // (step, order)
  for (std::size_t k = 0; k < sample_times.size(); ++k) {
    const double steps_in = (sample_times[k] - t0) / h;
    wanted.push_back(
        {static_cast<std::size_t>(std::llround(std::max(0.0, steps_in))), k});
  }
  std::sort(wanted.begin(), wanted.end());

  GridResult out;
  out.snapshots.resize(sample_times.size());

  double initial_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) initial_total += h * (g.r[i] + g.l[i]);

  auto plateau_width = [&]() {
    return g.has_plateau
               ? static_cast<double>(g.p_hi - g.p_lo + 1) * h
               : 0.0;
  };
  auto record = [&](std::size_t step, double t) {
    for (auto& [ws, wk] : wanted) {
      if (ws != step) continue;
      GridSnapshot snap;
      snap.t = t;
      snap.x0 = center(0);
      snap.h = h;
      snap.field.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const bool inside = g.has_plateau && i >= g.p_lo && i <= g.p_hi;
        snap.field[i] = inside ? phi : g.r[i] + g.l[i];
      }
      snap.right = g.r;
      snap.left = g.l;
      out.snapshots[wk] = std::move(snap);
    }
  };
  auto audit = [&]() {
    double total = phi * plateau_width();
    for (std::size_t i = 0; i < n; ++i) total += h * (g.r[i] + g.l[i]);
    out.events.volume_drift =
        std::max(out.events.volume_drift, std::abs(total - initial_total));
  };

  record(0, t0);
  for (std::size_t step = 1; step <= steps; ++step) {
    const double t = t0 + static_cast<double>(step) * h;
    if (g.r[n - 1] != 0.0 || g.l[0] != 0.0)
      throw ScenarioError("grid_simulate: support reached domain boundary");
    // Unit-Courant advection: exact cell shifts.
    for (std::size_t i = n - 1; i > 0; --i) g.r[i] = g.r[i - 1];
    g.r[0] = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) g.l[i] = g.l[i + 1];
    g.l[n - 1] = 0.0;

    if (g.phase == Phase::Free) {
      // Contact: seed the plateau with the saturated cell block.
      std::size_t lo = n, hi = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (g.r[i] + g.l[i] >= phi) {
          lo = std::min(lo, i);
          hi = std::max(hi, i);
        }
      }
      if (lo <= hi) {
        for (std::size_t i = lo; i <= hi; ++i)
          if (g.r[i] + g.l[i] < phi)
            throw ScenarioError(
                "grid_simulate: disconnected saturated region; outside the "
                "supported class");
        g.phase = Phase::Growth;
        g.has_plateau = true;
        g.p_lo = lo;
        g.p_hi = hi;
        g.absorbed = 0.0;
        for (std::size_t i = lo; i <= hi; ++i) {
          g.absorbed += h * (g.r[i] + g.l[i]);
          g.r[i] = g.l[i] = 0.0;
        }
        out.events.t_contact = t;
      }
    }

    if (g.phase == Phase::Growth) {
      // Mover content that advected into the frozen region is swallowed.
      for (std::size_t i = g.p_lo; i <= g.p_hi; ++i) {
        g.absorbed += h * (g.r[i] + g.l[i]);
        g.r[i] = g.l[i] = 0.0;
      }
      // Decay starts the moment the incoming amplitude at an edge has fallen
      // to half the cutoff: such material reflects instead of piling up, so
      // the frozen region must never extend through it. Hence the trigger is
      // read before the volume-driven expansion.
      const double in_right = g.p_hi + 1 < n ? g.l[g.p_hi + 1] : 0.0;
      const double in_left = g.p_lo > 0 ? g.r[g.p_lo - 1] : 0.0;
      if (in_right <= 0.5 * phi && in_left <= 0.5 * phi) {
        // Release as two half-cutoff steps.
        for (std::size_t i = g.p_lo; i <= g.p_hi; ++i) {
          g.r[i] = 0.5 * phi;
          g.l[i] = 0.5 * phi;
        }
        g.has_plateau = false;
        g.phase = Phase::Decayed;
        out.events.t_decay = t;
      } else {
        // Grow symmetrically until the frozen area covers what was absorbed.
        while (phi * plateau_width() < g.absorbed) {
          if (g.p_lo == 0 || g.p_hi + 1 >= n)
            throw ScenarioError(
                "grid_simulate: plateau reached domain boundary");
          --g.p_lo;
          ++g.p_hi;
          for (std::size_t i : {g.p_lo, g.p_hi}) {
            g.absorbed += h * (g.r[i] + g.l[i]);
            g.r[i] = g.l[i] = 0.0;
          }
        }
      }
    }

    audit();
    record(step, t);
  }
  return out;
}

}  // namespace cutoffwave
