#include "cutoffwave/grid_oracle.hpp"

#include <cmath>

#include "cutoffwave/analytic.hpp"
#include "cutoffwave/errors.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace cutoffwave;

namespace {

Scenario triangular_scenario(double amplitude = 0.75) {
  return make_mirror_scenario(testutil::triangle(1.0, amplitude));
}

}  // namespace

TEST_CASE("no-contact scenario advects exactly (unit Courant)") {
  const Scenario s = triangular_scenario(0.45);
  const double h = 0.01;
  GridParams p{h, 3.0, 1.0};
  const std::vector<double> times{-1.0, 0.0, 1.0};
  const GridResult r = grid_simulate(s, p, times);
  REQUIRE(r.snapshots.size() == 3);
  CHECK(!r.events.t_contact.has_value());
  // Drift is pure summation roundoff here.
  CHECK(r.events.volume_drift <= 1e-12);
  // Later snapshots are the earlier grids shifted by whole cells, bit for
  // bit: transport at unit Courant number never touches the values.
  const GridSnapshot& a = r.snapshots[0];
  const GridSnapshot& b = r.snapshots[2];
  const auto cells = static_cast<std::size_t>(std::llround((b.t - a.t) / h));
  REQUIRE(cells > 0);
  bool right_exact = true, left_exact = true;
  for (std::size_t i = cells; i < b.right.size(); ++i)
    right_exact = right_exact && b.right[i] == a.right[i - cells];
  for (std::size_t i = 0; i + cells < b.left.size(); ++i)
    left_exact = left_exact && b.left[i] == a.left[i + cells];
  CHECK(right_exact);
  CHECK(left_exact);
  // And the combined field tracks the continuum shift to roundoff.
  for (std::size_t i = 0; i < b.field.size(); ++i) {
    const double x = b.x0 + static_cast<double>(i) * b.h;
    const double expected = s.movers.plus.evaluate(x - b.t) +
                            s.movers.minus.evaluate(x + b.t);
    CHECK(std::abs(b.field[i] - expected) <= 1e-13);
  }
}

TEST_CASE("triangular scenario: events and conservation on the grid") {
  const Scenario s = triangular_scenario();
  const double h = 1.0 / 200.0;
  GridParams p{h, 3.0, 1.0};
  const std::vector<double> times{4.0 / 3.0};
  const GridResult r = grid_simulate(s, p, times);
  REQUIRE(r.events.t_contact.has_value());
  REQUIRE(r.events.t_decay.has_value());
  CHECK(std::abs(*r.events.t_contact - triangular_contact_time()) <= 2.0 * h);
  CHECK(std::abs(*r.events.t_decay - triangular_decay_time()) <= 2.0 * h);
  CHECK(r.events.volume_drift <= 6.0 * h);
  // Field never exceeds the cutoff on the sampled snapshot.
  for (double v : r.snapshots[0].field) CHECK(v <= 1.0 + 1e-12);
}

TEST_CASE("plateau edge tracks the closed-form trajectory at first order") {
  const Scenario s = triangular_scenario();
  const double h = 1.0 / 200.0;
  GridParams p{h, 3.0, 0.0};
  const std::vector<double> times{-0.25};
  const GridResult r = grid_simulate(s, p, times);
  const GridSnapshot& snap = r.snapshots[0];
  // Right edge of the cells at the cutoff.
  double edge = 0.0;
  for (std::size_t i = 0; i < snap.field.size(); ++i)
    if (snap.field[i] >= 1.0)
      edge = snap.x0 + static_cast<double>(i) * snap.h;
  CHECK(std::abs(edge - triangular_shock_position(snap.t)) <= 4.0 * h);
}

TEST_CASE("snapshot error vs the closed form shrinks at first order") {
  // Error against the closed form at the requested time; the oracle serves
  // the nearest step, so the half-cell time quantization dominates.
  const Scenario s = triangular_scenario();
  const double t_ref = 4.0 / 3.0;
  const std::vector<double> times{t_ref};
  double previous = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double h = k == 0 ? 1.0 / 100.0 : 1.0 / 200.0;
    const GridResult r = grid_simulate(s, GridParams{h, 3.0, t_ref}, times);
    const GridSnapshot& snap = r.snapshots[0];
    const double jump1 = t_ref + triangular_flat_end();
    const double jump2 = -jump1;
    double err = 0.0;
    for (std::size_t i = 0; i < snap.field.size(); ++i) {
      const double x = snap.x0 + static_cast<double>(i) * snap.h;
      if (std::abs(x - jump1) <= 3.0 * h || std::abs(x - jump2) <= 3.0 * h)
        continue;
      err = std::max(err,
                     std::abs(snap.field[i] - triangular_field(x, t_ref)));
    }
    CHECK(err <= 2.0 * h);
    if (k == 1) CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("domain too small is reported") {
  const Scenario s = triangular_scenario();
  CHECK_THROWS_AS(
      grid_simulate(s, GridParams{0.01, 1.5, 2.0}, std::vector<double>{2.0}),
      ScenarioError);
}
