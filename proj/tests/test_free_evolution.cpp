#include "cutoffwave/free_evolution.hpp"

#include <cmath>

#include "cutoffwave/errors.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace cutoffwave;
using testutil::triangle;

namespace {

MoverPair mirror_pair(const Profile& packet) {
  return {packet, packet.reflected()};
}

// Independent check: densely scan (x, t) for the first time the superposed
// field reaches the cutoff.
double dense_first_contact(const MoverPair& m, double phi_cut) {
  double t_hit = 1e9;
  for (int it = 0; it <= 4000; ++it) {
    const double t = -1.5 + 3.0 * it / 4000.0;
    const Profile snap = snapshot_profile(m, t);
    if (snap.max_value().value >= phi_cut - 1e-9) {
      t_hit = t;
      break;
    }
  }
  return t_hit;
}

}  // namespace

TEST_CASE("dalembert_eval matches the closed forms") {
  const MoverPair m = mirror_pair(triangle());
  CHECK(dalembert_eval(m, 0.0, -5.0 / 6.0) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(dalembert_eval(m, 0.0, -1.0 / 3.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // Disjoint supports: the value is whichever mover covers the point.
  CHECK(dalembert_eval(m, 2.5, 2.0) ==
        doctest::Approx(m.plus.evaluate(0.5)).epsilon(1e-14));
}

TEST_CASE("free evolution conserves the integral and composes in time") {
  const MoverPair m = mirror_pair(testutil::trapezoid());
  const double initial = m.plus.integral() + m.minus.integral();
  for (double t : {-3.0, -1.0, 0.0, 0.7, 2.5}) {
    CHECK(snapshot_profile(m, t).integral() ==
          doctest::Approx(initial).epsilon(1e-12));
  }
  // Evolving by t1 then t2 equals evolving by t1 + t2.
  const double t1 = 0.35, t2 = -1.1;
  MoverPair stepped{m.plus.shifted(t1), m.minus.shifted(-t1)};
  CHECK(sup_distance(snapshot_profile(stepped, t2),
                     snapshot_profile(m, t1 + t2)) <= 1e-12);
}

TEST_CASE("first contact of the triangular pair") {
  const auto ev = first_contact(mirror_pair(triangle()), 1.0);
  REQUIRE(ev.has_value());
  CHECK(ev->t == doctest::Approx(-1.0 / 3.0).epsilon(1e-11));
  CHECK(ev->x_left == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
  CHECK(ev->x_right == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("no contact when the peaks sum below the cutoff") {
  const auto ev = first_contact(mirror_pair(triangle(1.0, 0.45)), 1.0);
  CHECK(!ev.has_value());
}

TEST_CASE("mirror triangles of amplitude A touch at w(phi/(2A) - 1)") {
  for (double amplitude : {0.7, 0.55, 0.9}) {
    const MoverPair m = mirror_pair(triangle(1.0, amplitude));
    const auto ev = first_contact(m, 1.0);
    REQUIRE(ev.has_value());
    const double expected = 1.0 / (2.0 * amplitude) - 1.0;
    CHECK(ev->t == doctest::Approx(expected).epsilon(1e-10));
    CHECK(ev->x_left == doctest::Approx(expected).epsilon(1e-8));
    CHECK(ev->x_right == doctest::Approx(-expected).epsilon(1e-8));
    // Independent dense-scan oracle brackets the same instant.
    CHECK(std::abs(dense_first_contact(m, 1.0) - expected) <= 2e-3);
  }
}

TEST_CASE("contact time is stable under tolerance refinement") {
  const MoverPair m = mirror_pair(testutil::trapezoid());
  const auto coarse = first_contact(m, 1.0, 1e-9);
  const auto fine = first_contact(m, 1.0, 5e-10);
  REQUIRE(coarse.has_value());
  REQUIRE(fine.has_value());
  CHECK(std::abs(coarse->t - fine->t) < 1e-9);
  CHECK(coarse->t == doctest::Approx(-7.0 / 12.0).epsilon(1e-8));
  CHECK(coarse->x_right == doctest::Approx(1.0 / 12.0).epsilon(1e-7));
}

TEST_CASE("a mover at the cutoff is rejected") {
  CHECK_THROWS_AS(first_contact(mirror_pair(triangle(1.0, 1.0)), 1.0),
                  ScenarioError);
  CHECK_THROWS_AS(first_contact(mirror_pair(triangle(1.0, 1.2)), 1.0),
                  ScenarioError);
}
