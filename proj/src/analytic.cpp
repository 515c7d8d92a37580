#include "cutoffwave/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace cutoffwave {

namespace {
const double kInvRoot2 = 1.0 / std::sqrt(2.0);
}

double triangular_contact_time(double width) { return -width / 3.0; }

double triangular_decay_time(double width) { return -width / 3.0 * kInvRoot2; }

double triangular_annihilation_time(double width) { return width / 3.0; }

double triangular_plateau_half_width(double width) {
  return width / 3.0 * (1.0 + kInvRoot2);
}

double triangular_flat_end(double width) {
  return width / 3.0 * (1.0 + std::sqrt(2.0));
}

double triangular_packet(double u, const TriangularParams& p) {
  const double a = std::abs(u);
  if (a >= p.width) return 0.0;
  return 0.75 * p.cutoff * (1.0 - a / p.width);
}

double triangular_final_packet(double u, const TriangularParams& p) {
  const double flat_lo = -p.width / 3.0;
  const double flat_hi = triangular_flat_end(p.width);
  if (u < -p.width || u > p.width) return 0.0;
  if (u < flat_lo) return 0.75 * p.cutoff * (1.0 + u / p.width);
  if (u <= flat_hi) return 0.5 * p.cutoff;
  return 0.75 * p.cutoff * (1.0 - u / p.width);
}

double triangular_field(double x, double t, const TriangularParams& p) {
  const double t_contact = triangular_contact_time(p.width);
  const double t_decay = triangular_decay_time(p.width);
  if (t <= t_contact)
    return triangular_packet(x - t, p) + triangular_packet(x + t, p);
  if (t < t_decay) {
    const double r = p.width / 3.0;
    const double edge = r + std::sqrt(r * r - t * t);
    if (std::abs(x) < edge) return p.cutoff;
    return triangular_packet(x - t, p) + triangular_packet(x + t, p);
  }
  return triangular_final_packet(x - t, p) +
         triangular_final_packet(-(x + t), p);
}

double triangular_displacement(double elapsed, double width) {
  // The balance equation behind this closed form keeps its root up to
  // width/3; the physical growth branch uses only [0, decay onset].
  if (elapsed < 0.0 || elapsed > width / 3.0 + 1e-12 * width)
    throw std::invalid_argument(
        "triangular_displacement: elapsed time outside the validity range");
  const double arg = 2.0 * width * elapsed / 3.0 - elapsed * elapsed;
  return std::sqrt(std::max(arg, 0.0));
}

double triangular_shock_position(double t, double width) {
  const double t_contact = triangular_contact_time(width);
  const double t_decay = triangular_decay_time(width);
  const double t_end = triangular_annihilation_time(width);
  if (t < t_contact || t >= t_end)
    throw std::invalid_argument(
        "triangular_shock_position: no shock exists at this time");
  if (t <= t_decay) {
    const double r = width / 3.0;
    return r + std::sqrt(std::max(r * r - t * t, 0.0));
  }
  return width / 3.0 - t;
}

double triangular_final_centroid(double width) {
  return width / 27.0 + 2.0 * std::sqrt(2.0) * width / 81.0;
}

}  // namespace cutoffwave
