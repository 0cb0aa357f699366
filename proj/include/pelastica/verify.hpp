#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pelastica/curve.hpp"
#include "pelastica/quadrature.hpp"
#include "pelastica/scalar.hpp"

namespace pelastica {

struct VerificationReport {
    std::string check_name;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::map<std::string, std::string> metadata;
};

// Uniformly spaced (s, kappa, kappa') samples over m periods, n per period,
// from the exact quadrature-inversion model.
std::vector<ProfileSample> uniform_profile(const ElasticaParams& params, int n_per_period,
                                           int m = 1);

// Euler-Lagrange residual p (kappa^{p-1})'' + eps1 eps2 (p-1) kappa^{p+1}
// - eps2 p kappa^{p-1} by second-order centered differences on a uniform
// profile, normalized by max |kappa^{p+1}|. The threshold follows the h^2
// truncation model with the fourth difference of kappa^{p-1} measured from
// the data itself.
VerificationReport el_residual(std::span<const ProfileSample> profile,
                               const ElasticaParams& params);

// First-integral residual max |LHS(kappa, kappa') - a| / |a|.
VerificationReport conservation_residual(std::span<const ProfileSample> profile,
                                         const ElasticaParams& params);

// Momentum experiment: xi = p k^{p-1} gamma + sigma p (k^{p-1})' gamma'
// + sigma (1-p) k^p gamma x gamma' for both cross variants and both
// traversal orientations sigma; gamma' by five-point finite differences of
// the trace model. Exactly one cross variant must come out constant with
// <xi, xi> = a; metadata records the variant and the orientation.
VerificationReport momentum(const Trace& tr, double threshold = 1e-6);

// Checks the two routes to <J,J>: eps1 (p-1)^2 k^{2p} + eps2 p^2 ((k^{p-1})')^2
// versus eps2 a + p^2 k^{2(p-1)}, agreement to 1e-9 and positivity everywhere.
VerificationReport killing_norm(const Trace& tr);

// Endpoint behavior of Lambda_p: sqrt(2) pi at the a_* end, monotone approach
// to pi at the 0 end, sampled at a_* + 10^-k |a_*| and -10^-k |a_*|, k = 2..8.
VerificationReport limit_checks(double p, SpaceForm space, const QuadratureConfig& cfg = {});

struct ScanPoint {
    double a = 0.0;
    double lambda = 0.0;
    bool decreasing_from_prev = true;
};

struct ScanResult {
    std::vector<ScanPoint> points;
    bool strictly_decreasing = true;
    bool range_in_window = true;  // every value inside (pi, sqrt(2) pi)
};

// Lambda_p over a grid log-spaced toward both window endpoints.
ScanResult monotonicity_scan(double p, SpaceForm space, int grid_size,
                             const QuadratureConfig& cfg = {});

// Fixed-step fourth-order integration of the Euler-Lagrange equation as a
// second-order system in kappa, from kappa(0) = beta, kappa'(0) = 0. Throws
// ConvergenceError if the first-integral drift exceeds 1e-6 |a|.
std::vector<ProfileSample> ode_oracle(const ElasticaParams& params, double s_max, double step);

// Curvature period measured from the minima of an ODE-integrated profile
// (quadratic refinement of the kappa' sign changes, averaged across periods).
double ode_period(std::span<const ProfileSample> profile);

}  // namespace pelastica
