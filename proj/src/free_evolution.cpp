#include "cutoffwave/free_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cutoffwave/errors.hpp"

namespace cutoffwave {

double dalembert_eval(const MoverPair& m, double x, double t, Side side) {
  return m.plus.evaluate(x - t, side) + m.minus.evaluate(x + t, side);
}

Profile snapshot_profile(const MoverPair& m, double t) {
  return superpose(m.plus.shifted(t), m.minus.shifted(-t));
}

std::optional<ContactEvent> first_contact(const MoverPair& m, double phi_cut,
                                          double tol_event) {
  if (m.plus.empty() || m.minus.empty()) return std::nullopt;
  const double delta = phi_cut * std::max(tol_event, 1e-15);
  const double peak =
      std::max(m.plus.max_value().value, m.minus.max_value().value);
  if (peak >= phi_cut - 4.0 * delta)
    throw ScenarioError("mover amplitude reaches the field cutoff");

  // Candidate breakpoints: times at which a knot of the right mover meets a
  // knot of the left mover. Between consecutive candidates the superposed
  // maximum is a maximum of finitely many linear functions of t, hence
  // convex; endpoint values bound the interior.
  std::vector<double> times;
  for (const Knot& a : m.plus.knots())
    for (const Knot& b : m.minus.knots()) times.push_back(0.5 * (b.x - a.x));
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  auto peak_at = [&](double t) { return snapshot_profile(m, t).max_value().value; };
  // The shifted level makes grazing contacts (the maximum touches the cutoff
  // without ever exceeding it) findable by the same search.
  auto reached = [&](double t) { return peak_at(t) >= phi_cut - delta; };

  std::size_t hit = times.size();
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (reached(times[i])) {
      hit = i;
      break;
    }
  }
  if (hit == times.size()) return std::nullopt;
  if (hit == 0)
    throw ScenarioError("field already at the cutoff when supports meet");

  // Within one inter-collision interval the set where the convex maximum
  // meets the level is an interval ending at the right endpoint, so the
  // predicate is monotone there. Bisect its boundary and keep the side on
  // which the level is reached; the maximum may jump (two half-cutoff flats
  // meeting), which a signed root-finder would not survive.
  double lo = times[hit - 1];
  double hi = times[hit];
  while (hi - lo > tol_event) {
    const double mid = 0.5 * (lo + hi);
    (reached(mid) ? hi : lo) = mid;
  }
  const double t_star = hi;

  const MaxInfo info = snapshot_profile(m, t_star).max_value();
  if (info.where.empty())
    throw ScenarioError("internal: contact located but not attained");
  if (info.where.size() > 1)
    throw ScenarioError(
        "cutoff first reached on a disconnected set; scenario outside the "
        "supported single-plateau class");
  return ContactEvent{t_star, info.where.front().lo, info.where.front().hi};
}

}  // namespace cutoffwave
