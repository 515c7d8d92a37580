#include "cutoffwave/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cutoffwave {

namespace {

bool removable_interior(const Knot& prev, const Knot& k, const Knot& next) {
  if (k.left != k.right) return false;
  // Equal slopes on both sides, compared by cross-multiplication.
  const double dl = k.x - prev.x;
  const double dr = next.x - k.x;
  return (k.left - prev.right) * dr == (next.left - k.right) * dl;
}

void canonicalize(std::vector<Knot>& ks) {
  for (std::size_t i = 1; i < ks.size(); ++i) {
    if (!(ks[i - 1].x < ks[i].x))
      throw std::invalid_argument(
          "profile knot positions must be strictly increasing");
  }
  bool changed = true;
  while (changed && !ks.empty()) {
    changed = false;
    // Leading/trailing all-zero knots that continue a zero segment.
    if (ks.size() == 1 && ks.front().left == 0.0 && ks.front().right == 0.0) {
      ks.clear();
      break;
    }
    if (ks.size() >= 2 && ks.front().left == 0.0 && ks.front().right == 0.0 &&
        ks[1].left == 0.0) {
      ks.erase(ks.begin());
      changed = true;
      continue;
    }
    if (ks.size() >= 2 && ks.back().left == 0.0 && ks.back().right == 0.0 &&
        ks[ks.size() - 2].right == 0.0) {
      ks.pop_back();
      changed = true;
      continue;
    }
    for (std::size_t i = 1; i + 1 < ks.size(); ++i) {
      if (removable_interior(ks[i - 1], ks[i], ks[i + 1])) {
        ks.erase(ks.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (!ks.empty()) {
    if (ks.front().left != 0.0 || ks.back().right != 0.0)
      throw std::invalid_argument("profile must vanish outside its support");
  }
}

// Integral of x*v(x) over [a, b] where v is linear with v(a)=va, v(b)=vb.
double moment_of_linear(double a, double b, double va, double vb) {
  return (b - a) * ((2.0 * a + b) * va + (a + 2.0 * b) * vb) / 6.0;
}

}  // namespace

Profile Profile::from_knots(std::vector<Knot> knots) {
  canonicalize(knots);
  return Profile(std::move(knots));
}

Profile Profile::from_points(
    const std::vector<std::pair<double, double>>& pts) {
  if (pts.empty()) return Profile();
  if (pts.front().second != 0.0 || pts.back().second != 0.0)
    throw std::invalid_argument(
        "from_points: first and last values must be zero");
  std::vector<Knot> ks;
  ks.reserve(pts.size());
  for (const auto& [x, v] : pts) ks.push_back({x, v, v});
  return from_knots(std::move(ks));
}

Profile Profile::box(double lo, double hi, double level) {
  if (!(lo < hi) || level == 0.0) return Profile();
  return from_knots({{lo, 0.0, level}, {hi, level, 0.0}});
}

double Profile::segment_value(std::size_t i, double x) const {
  const Knot& k0 = knots_[i];
  const Knot& k1 = knots_[i + 1];
  const double t = (x - k0.x) / (k1.x - k0.x);
  return k0.right + (k1.left - k0.right) * t;
}

double Profile::evaluate(double x, Side side) const {
  if (knots_.empty() || x < knots_.front().x || x > knots_.back().x)
    return 0.0;
  auto it = std::lower_bound(
      knots_.begin(), knots_.end(), x,
      [](const Knot& k, double v) { return k.x < v; });
  if (it != knots_.end() && it->x == x)
    return side == Side::Left ? it->left : it->right;
  const auto i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  return segment_value(i, x);
}

double Profile::integral(double a, double b) const {
  if (a > b) throw std::invalid_argument("integral: requires a <= b");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    const double lo = std::max(a, knots_[i].x);
    const double hi = std::min(b, knots_[i + 1].x);
    if (lo >= hi) continue;
    const double va = segment_value(i, lo);
    const double vb = segment_value(i, hi);
    total += 0.5 * (va + vb) * (hi - lo);
  }
  return total;
}

double Profile::integral() const {
  if (knots_.empty()) return 0.0;
  return integral(knots_.front().x, knots_.back().x);
}

double Profile::first_moment() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    total += moment_of_linear(knots_[i].x, knots_[i + 1].x, knots_[i].right,
                              knots_[i + 1].left);
  }
  return total;
}

double Profile::centroid() const {
  const double area = integral();
  if (area == 0.0)
    throw std::domain_error("centroid undefined for zero-integral profile");
  return first_moment() / area;
}

MaxInfo Profile::max_value() const {
  MaxInfo info;
  if (knots_.empty()) return info;  // zero profile: max 0, empty attainment
  double maxv = -std::numeric_limits<double>::infinity();
  for (const Knot& k : knots_) maxv = std::max(maxv, std::max(k.left, k.right));
  if (maxv <= 0.0) {
    // The zero value outside the support is the global maximum.
    info.value = std::max(maxv, 0.0);
    return info;
  }
  info.value = maxv;
  // Attainment tolerance: identical values may differ by a few ulp when they
  // arrive through different arithmetic routes (e.g. mirrored superposition).
  const double tol =
      16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, maxv);
  auto attained = [&](double v) { return v >= maxv - tol; };
  auto add = [&](double lo, double hi) {
    if (!info.where.empty() && lo <= info.where.back().hi) {
      info.where.back().hi = std::max(info.where.back().hi, hi);
    } else {
      info.where.push_back({lo, hi});
    }
  };
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (attained(knots_[i].left) || attained(knots_[i].right))
      add(knots_[i].x, knots_[i].x);
    if (i + 1 < knots_.size() && attained(knots_[i].right) &&
        attained(knots_[i + 1].left))
      add(knots_[i].x, knots_[i + 1].x);
  }
  return info;
}

std::optional<double> Profile::level_crossing_min(double c) const {
  if (!(c > 0.0))
    throw std::invalid_argument("level_crossing_min: level must be positive");
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const Knot& k = knots_[i];
    if (k.left == c || k.right == c ||
        (std::min(k.left, k.right) < c && std::max(k.left, k.right) > c))
      return k.x;
    if (i + 1 < knots_.size()) {
      const double v0 = k.right;
      const double v1 = knots_[i + 1].left;
      if ((v0 < c && v1 > c) || (v0 > c && v1 < c)) {
        const double t = (c - v0) / (v1 - v0);
        return k.x + t * (knots_[i + 1].x - k.x);
      }
    }
  }
  return std::nullopt;
}

std::optional<double> Profile::level_crossing_max(double c) const {
  if (!(c > 0.0))
    throw std::invalid_argument("level_crossing_max: level must be positive");
  for (std::size_t i = knots_.size(); i-- > 0;) {
    const Knot& k = knots_[i];
    if (i + 1 < knots_.size()) {
      const double v0 = k.right;
      const double v1 = knots_[i + 1].left;
      if ((v0 < c && v1 > c) || (v0 > c && v1 < c)) {
        const double t = (c - v0) / (v1 - v0);
        return k.x + t * (knots_[i + 1].x - k.x);
      }
    }
    if (k.left == c || k.right == c ||
        (std::min(k.left, k.right) < c && std::max(k.left, k.right) > c))
      return k.x;
  }
  return std::nullopt;
}

std::optional<Interval> Profile::support(double floor) const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  auto big = [&](double v) { return std::abs(v) > floor; };
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (big(knots_[i].left) || big(knots_[i].right)) {
      lo = std::min(lo, knots_[i].x);
      hi = std::max(hi, knots_[i].x);
    }
    if (i + 1 < knots_.size() &&
        (big(knots_[i].right) || big(knots_[i + 1].left))) {
      lo = std::min(lo, knots_[i].x);
      hi = std::max(hi, knots_[i + 1].x);
    }
  }
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

Profile Profile::shifted(double d) const {
  std::vector<Knot> ks = knots_;
  for (Knot& k : ks) k.x += d;
  return Profile(std::move(ks));
}

Profile Profile::reflected() const {
  std::vector<Knot> ks;
  ks.reserve(knots_.size());
  for (auto it = knots_.rbegin(); it != knots_.rend(); ++it)
    ks.push_back({-it->x, it->right, it->left});
  return Profile(std::move(ks));
}

Profile Profile::restricted(double a, double b) const {
  if (knots_.empty() || !(a < b) || b < knots_.front().x ||
      a > knots_.back().x)
    return Profile();
  std::vector<Knot> ks;
  const double va = evaluate(a, Side::Right);
  ks.push_back({a, 0.0, va});
  for (const Knot& k : knots_) {
    if (k.x <= a || k.x >= b) continue;
    ks.push_back(k);
  }
  ks.push_back({b, evaluate(b, Side::Left), 0.0});
  return from_knots(std::move(ks));
}

Profile Profile::flattened(double a, double b, double level) const {
  if (!(a < b)) return *this;
  std::vector<Knot> ks;
  for (const Knot& k : knots_) {
    if (k.x < a) ks.push_back(k);
  }
  ks.push_back({a, evaluate(a, Side::Left), level});
  ks.push_back({b, level, evaluate(b, Side::Right)});
  for (const Knot& k : knots_) {
    if (k.x > b) ks.push_back(k);
  }
  return from_knots(std::move(ks));
}

Profile superpose(const Profile& a, const Profile& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<double> xs;
  xs.reserve(a.knots().size() + b.knots().size());
  for (const Knot& k : a.knots()) xs.push_back(k.x);
  for (const Knot& k : b.knots()) xs.push_back(k.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Knot> ks;
  ks.reserve(xs.size());
  for (double x : xs) {
    ks.push_back({x, a.evaluate(x, Side::Left) + b.evaluate(x, Side::Left),
                  a.evaluate(x, Side::Right) + b.evaluate(x, Side::Right)});
  }
  return Profile::from_knots(std::move(ks));
}

double sup_distance(const Profile& a, const Profile& b) {
  std::vector<double> xs;
  for (const Knot& k : a.knots()) xs.push_back(k.x);
  for (const Knot& k : b.knots()) xs.push_back(k.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  double d = 0.0;
  for (double x : xs) {
    d = std::max(
        d, std::abs(a.evaluate(x, Side::Left) - b.evaluate(x, Side::Left)));
    d = std::max(
        d, std::abs(a.evaluate(x, Side::Right) - b.evaluate(x, Side::Right)));
  }
  return d;
}

double sup_distance_off_jumps(const Profile& a, const Profile& b,
                              double jump_window) {
  std::vector<double> jumps;
  for (const Profile* p : {&a, &b}) {
    for (const Knot& k : p->knots())
      if (k.left != k.right) jumps.push_back(k.x);
  }
  auto near_jump = [&](double x) {
    for (double j : jumps)
      if (std::abs(x - j) <= jump_window) return true;
    return false;
  };
  std::vector<double> xs;
  for (const Knot& k : a.knots()) xs.push_back(k.x);
  for (const Knot& k : b.knots()) xs.push_back(k.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  double d = 0.0;
  auto sample = [&](double x) {
    d = std::max(
        d, std::abs(a.evaluate(x, Side::Left) - b.evaluate(x, Side::Left)));
    d = std::max(
        d, std::abs(a.evaluate(x, Side::Right) - b.evaluate(x, Side::Right)));
  };
  for (double x : xs) {
    if (near_jump(x)) {
      sample(x - 2.0 * jump_window);
      sample(x + 2.0 * jump_window);
    } else {
      sample(x);
    }
  }
  return d;
}

}  // namespace cutoffwave
