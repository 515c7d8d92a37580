#pragma once

#include <cmath>
#include <stdexcept>

namespace cutoffwave {

// Bracketed scalar root finding: bisection interleaved with secant steps.
// Requires f(lo) and f(hi) to differ in sign (either may be exactly zero).
// Returns a point whose enclosing bracket has width <= tol. A bisection step
// is forced every third iteration so the bracket provably shrinks.
template <typename F>
double find_root(F&& f, double lo, double hi, double tol) {
  if (!(lo <= hi)) throw std::invalid_argument("find_root: invalid bracket");
  double flo = f(lo);
  if (flo == 0.0) return lo;
  double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw std::runtime_error("find_root: root not bracketed");

  for (int it = 0; it < 256 && (hi - lo) > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    if (it % 3 != 2) {
      const double denom = fhi - flo;
      if (denom != 0.0) {
        const double secant = hi - fhi * (hi - lo) / denom;
        const double margin = 1e-3 * (hi - lo);
        if (secant > lo + margin && secant < hi - margin) mid = secant;
      }
    }
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace cutoffwave
