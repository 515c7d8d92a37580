#pragma once

namespace cutoffwave {

// Closed forms for the mirror-symmetric triangular collision (packet
// amplitude fixed at 3/4 of the cutoff). Used as the exactness oracle for
// the event-driven engine; kept independent of the Profile machinery on
// purpose.
struct TriangularParams {
  double width = 1.0;   // packet half-width; total packet width is twice this
  double cutoff = 1.0;  // field ceiling
};

// Incoming packet shape (either mover; the two are identical).
double triangular_packet(double u, const TriangularParams& p = {});

// Outgoing right-moving packet shape. The flat half-cutoff stretch is taken
// closed at both ends.
double triangular_final_packet(double u, const TriangularParams& p = {});

// Full field at (x, t), valid for all times.
double triangular_field(double x, double t, const TriangularParams& p = {});

// Shock advance as a function of time elapsed since the shock formed.
// Valid for elapsed in [0, (1 - 1/sqrt(2)) * width / 3].
double triangular_displacement(double elapsed, double width = 1.0);

// Right shock position; valid from contact until the shocks annihilate.
double triangular_shock_position(double t, double width = 1.0);

double triangular_final_centroid(double width = 1.0);

// Event times and geometry.
double triangular_contact_time(double width = 1.0);       // -width/3
double triangular_decay_time(double width = 1.0);         // -width/(3*sqrt(2))
double triangular_annihilation_time(double width = 1.0);  // width/3
double triangular_plateau_half_width(double width = 1.0);
double triangular_flat_end(double width = 1.0);  // right end of the final flat

}  // namespace cutoffwave
