#pragma once

namespace pelastica {

// Carlson symmetric forms, duplication-theorem evaluation, ~1e-15 relative.
// rf/rd: x, y, z nonnegative, at most one zero. rj: additionally w > 0.
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);
double carlson_rj(double x, double y, double z, double w);
double carlson_rc(double x, double y);

// Legendre complete integrals, modulus convention K(zeta) = F(pi/2, zeta).
double ellip_k(double zeta);
double ellip_e(double zeta);
double ellip_pi(double chi, double zeta);  // chi < 1

// Incomplete integrals, needed by Heuman's Lambda. 0 <= phi <= pi/2.
double ellip_f_inc(double phi, double zeta);
double ellip_e_inc(double phi, double zeta);

// Heuman's Lambda via the complete/incomplete combination
//   (2/pi) [ E(z) F(phi, z') + K(z) E(phi, z') - K(z) F(phi, z') ],  z' = sqrt(1-z^2).
double heuman_lambda(double phi, double zeta);

// Largest root of -k^3 + 9k + 4a on (sqrt(3), 3) and the second positive root,
// for the p = 3/2 closed forms; valid for -3 sqrt(3)/2 < a < 0.
struct Cubic32Roots {
    double alpha;
    double beta;
    double delta;  // the negative root, -(alpha+beta)
};
Cubic32Roots cubic_roots_32(double a);

// Closed form of the closure function for p = 3/2 (hyperbolic branch).
double lambda_32_closed(double a);

// Closed-form energies: p = -1 on H^2_1 (window -4 < a < 0) and p = 3/2 on
// H^2 (window -3 sqrt(3)/2 < a < 0), for a curve closing in m periods.
double theta_m1_closed(double a, int m);
double theta_32_closed(double a, int m);

}  // namespace pelastica
