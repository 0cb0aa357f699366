#pragma once

#include "pelastica/lorentz.hpp"

namespace pelastica {

// Exponent/integration-constant pair for one family of critical curves.
// Admissible: p > 1 on H^2, p < 0 on H^2_1, and a_*(p) < a < 0.
struct ElasticaParams {
    SpaceForm space;
    double p = 2.0;
    double a = -1.0;
};

// Curvature extrema of a periodic solution and the interior maximizer of
// f_{p,a}; always 0 < beta < kappa_c < alpha.
struct RootData {
    double beta = 0.0;
    double alpha = 0.0;
    double kappa_c = 0.0;
};

// x^q for x > 0 via exp(q log x); throws std::domain_error on x <= 0.
double rpow(double x, double q);

// True iff (p, space) is an admissible pairing (p > 1 for H^2, p < 0 for H^2_1).
bool admissible_exponent(double p, SpaceForm space);

// Throws std::domain_error unless params are fully admissible, a included.
void validate(const ElasticaParams& params);

// Infimum of the admissible window: a_* = -((-1)^e p)^p ((-1)^e (p-1))^{1-p}.
double a_star(double p, SpaceForm space);

// f_{p,a}(kappa) = a - eps2 (p-1)^2 kappa^{2p} + eps2 p^2 kappa^{2(p-1)}.
// Positive exactly between the two curvature roots.
double f_pa(double kappa, const ElasticaParams& params);

// Interior maximizer of f_{p,a}: sqrt(p/(p-1)). Requires p > 1 or p < 0.
double kappa_c(double p);

// Critical point of Q_{p,a} on the p < 0 branch: ((1-p)/(-a))^(-1/(2p)).
double q_critical(const ElasticaParams& params);

struct RootSolveOptions {
    double tol = 1e-13;  // relative bracket width per root
};

// Bisection for the two positive roots of f_{p,a}, bracketed by halving and
// doubling away from kappa_c. Throws CircleDegenerateError when the window
// a - a_* has collapsed, BracketError when no sign change is found, and
// ConvergenceError if bisection fails to reach tol.
RootData solve_roots(const ElasticaParams& params, double tol = 1e-13);

}  // namespace pelastica
