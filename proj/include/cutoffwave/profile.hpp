#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace cutoffwave {

// One breakpoint of a piecewise-linear profile. `left` and `right` are the
// one-sided limits of the profile at `x`; they differ at a jump
// discontinuity and coincide at a plain slope break.
struct Knot {
  double x = 0.0;
  double left = 0.0;
  double right = 0.0;
};

enum class Side { Left, Right };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

struct MaxInfo {
  double value = 0.0;
  // Connected components of the attainment set, left to right. Empty when the
  // maximum is the zero value taken outside the support.
  std::vector<Interval> where;
};

// Compactly supported piecewise-linear profile with first-class jump
// discontinuities. Between consecutive knots the profile is the straight
// line from knot[i].right to knot[i+1].left; outside the knot range it is
// identically zero. Stored knots are canonical: strictly increasing
// positions, no removable (continuous, collinear) knots, no all-zero
// leading/trailing knots. Immutable value type; every operation returns a
// new profile.
class Profile {
 public:
  Profile() = default;  // the zero profile

  // General constructor; validates and canonicalizes.
  static Profile from_knots(std::vector<Knot> knots);
  // Continuous profile through the given (x, value) points. First and last
  // values must be zero (compact support).
  static Profile from_points(const std::vector<std::pair<double, double>>& pts);
  // Constant `level` on [lo, hi], zero elsewhere. Empty when hi <= lo.
  static Profile box(double lo, double hi, double level);

  const std::vector<Knot>& knots() const { return knots_; }
  bool empty() const { return knots_.empty(); }

  // Knot range; meaningful only for non-empty profiles.
  double min_x() const { return knots_.front().x; }
  double max_x() const { return knots_.back().x; }

  double evaluate(double x, Side side = Side::Right) const;

  // Exact trapezoid integral over [a, b] (throws if a > b), or over the
  // whole support.
  double integral(double a, double b) const;
  double integral() const;
  double first_moment() const;
  // First moment over integral; throws std::domain_error when the total
  // integral vanishes.
  double centroid() const;

  // Global maximum over the whole line (the zero value outside the support
  // competes) together with its attainment set.
  MaxInfo max_value() const;

  // Smallest/largest x where the profile attains the level c (c > 0). A jump
  // knot whose one-sided values straddle c counts as attaining c at the knot.
  std::optional<double> level_crossing_min(double c) const;
  std::optional<double> level_crossing_max(double c) const;

  // Smallest interval containing every point where |value| > floor.
  std::optional<Interval> support(double floor = 0.0) const;

  Profile shifted(double d) const;
  Profile reflected() const;
  // Zero outside [a, b]; keeps one-sided limits at the cut points.
  Profile restricted(double a, double b) const;
  // Replace the profile on [a, b] by the constant `level` (jump knots at the
  // boundaries where the original values differ from `level`).
  Profile flattened(double a, double b, double level) const;

 private:
  explicit Profile(std::vector<Knot> knots) : knots_(std::move(knots)) {}
  double segment_value(std::size_t i, double x) const;

  std::vector<Knot> knots_;
};

// Pointwise sum with merged knot set, re-canonicalized.
Profile superpose(const Profile& a, const Profile& b);

// Exact sup-norm distance between two piecewise-linear profiles.
double sup_distance(const Profile& a, const Profile& b);

// Sup-norm distance ignoring a window of half-width `jump_window` around
// every jump discontinuity of either profile. The plain sup-norm is
// ill-conditioned when two profiles carry the same jump at positions that
// differ by roundoff; this variant compares the fields everywhere else.
double sup_distance_off_jumps(const Profile& a, const Profile& b,
                              double jump_window = 1e-9);

}  // namespace cutoffwave
