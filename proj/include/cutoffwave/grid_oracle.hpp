#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cutoffwave/shock.hpp"

namespace cutoffwave {

// Independent first-order check on the exact engine: split advection at unit
// Courant number (free transport is exact cell shifting) plus explicit
// volume accounting for the frozen region. All discretization error lives in
// the plateau bookkeeping.
struct GridParams {
  double h = 0.01;         // cell width; the time step equals h
  double half_width = 3.0; // domain is [-half_width, half_width]
  double t_end = 1.0;
};

struct GridSnapshot {
  double t = 0.0;
  double x0 = 0.0;  // center of cell 0
  double h = 0.0;
  std::vector<double> field;  // right + left, plateau cells at the cutoff
  // Per-mover grids, for diagnosing the exactness of the advection.
  std::vector<double> right;
  std::vector<double> left;
};

struct GridEvents {
  std::optional<double> t_contact;
  std::optional<double> t_decay;
  // Worst deviation of h*sum(r+l) + cutoff * plateau width from the initial
  // total; bounded by one plateau-quantization cell per event.
  double volume_drift = 0.0;
};

struct GridResult {
  std::vector<GridSnapshot> snapshots;
  GridEvents events;
};

// Runs the scenario on the grid and samples the field at the step times
// nearest the requested sample times (the last sample lands on the grid
// exactly). Throws ScenarioError when support reaches the domain boundary.
GridResult grid_simulate(const Scenario& s, const GridParams& p,
                         std::span<const double> sample_times);

}  // namespace cutoffwave
