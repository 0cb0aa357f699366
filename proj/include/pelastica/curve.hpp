#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pelastica/lorentz.hpp"
#include "pelastica/quadrature.hpp"
#include "pelastica/scalar.hpp"

namespace pelastica {

struct CurveSample {
    double s = 0.0;
    double kappa = 0.0;
    double kappa_prime = 0.0;
    double theta = 0.0;
    Vec3L gamma;
};

struct ProfileSample {
    double s = 0.0;
    double kappa = 0.0;
    double kappa_prime = 0.0;
};

struct Trace {
    ElasticaParams params;
    RootData roots;
    double period_rho = 0.0;
    double lambda = 0.0;  // angular progression accumulated over one period
    int m = 1;
    std::vector<CurveSample> samples;
};

struct ClosureResult {
    int n = 0;
    int m = 0;
    double q = 0.0;
    double a_q = 0.0;
    double lambda_at_aq = 0.0;
    double closure_defect = 0.0;
    // Cleared if the bisection ever observed Lambda samples ordered against
    // the expected decrease; uniqueness of a_q is reported, never assumed.
    bool monotone_bracket = true;
};

struct CircleData {
    double kappa = 0.0;
    double radius_L3 = 0.0;
    double height_z = 0.0;
};

// Non-geodesic circle solution: kappa = sqrt(p/(p-1)), L^3 radius
// sqrt((-1)^e (p-1)), parallel height z^2 = (-1)^e p (z < 0 on H^2_1).
CircleData circle(double p, SpaceForm space);

// Heights of the two bounding parallels p kappa^{p-1}/sqrt(-a) at the
// curvature extrema, returned ordered.
std::pair<double, double> bounding_parallels(const ElasticaParams& params, const RootData& roots);

// Smooth arc-length model of one curvature half-period, built by quadrature
// inversion in the substitution angle t (kappa = beta + (alpha-beta) sin^2 t).
// Cumulative s(t) and theta(t) anchor a Chebyshev-spaced grid; everything else
// is evaluated exactly from the first integral. Extension past the first
// half-period uses the even reflection of kappa and theta(rho - s) =
// Lambda - theta(s).
class CurveModel {
public:
    CurveModel(const ElasticaParams& params, int cells_per_half_period = 256);

    const ElasticaParams& params() const { return params_; }
    const RootData& roots() const { return roots_; }
    double period() const { return rho_; }
    double lambda() const { return lam_; }

    // Arc length and angular progression at substitution angle t in [0, pi/2].
    double s_of_t(double t) const;
    double theta_of_t(double t) const;
    double t_of_s(double s_half) const;  // inverse on [0, rho/2]

    // Full curve data at any arc length (periodic extension, s may be
    // negative). Throws ConvergenceError if the Killing norm ever fails to be
    // positive at an evaluation point.
    CurveSample eval(double s) const;

    // Same data at substitution angle t in [0, pi/2]; turning points are
    // exact here because no arc-length inversion is involved.
    CurveSample eval_at_t(double t) const;

    // Grid anchors of the first half-period (ascending t).
    const std::vector<double>& anchors_t() const { return t_; }

private:
    struct Rates {
        double ds_dt;
        double dtheta_dt;
    };
    Rates rates(double t) const;
    double cell_integral(double t0, double t1, bool theta) const;

    ElasticaParams params_;
    RootData roots_;
    HalfPeriodCore core_;
    std::vector<double> t_, s_, th_;
    double rho_ = 0.0, lam_ = 0.0;
};

// Curvature and derivative over m periods; kappa(0) = beta, kappa'(0) = 0,
// turning points exact by construction.
std::vector<ProfileSample> curvature_profile(const ElasticaParams& params, const RootData& roots,
                                             int n_samples, int m = 1,
                                             const QuadratureConfig& cfg = {});

// Full trace over m periods at n_samples Chebyshev cells per half-period.
Trace trace(const ElasticaParams& params, int m, int n_samples = 256,
            const QuadratureConfig& cfg = {});

struct ClosureOptions {
    double lambda_tol = 1e-10;
    int trace_samples = 256;
};

// Solve Lambda_p(a) = 2 pi n / m for a in (a_*, 0), then trace m periods and
// measure the endpoint defect. Requires gcd(n, m) = 1 and m < 2n < sqrt(2) m
// (checked exactly as 2 n^2 < m^2).
ClosureResult solve_closure(double p, SpaceForm space, int n, int m,
                            const QuadratureConfig& cfg = {}, const ClosureOptions& opts = {});

struct FamilyEntry {
    double p = 0.0;
    std::optional<ClosureResult> closure;
    std::optional<Trace> curve;
    std::string error;  // nonempty when this p failed; batch continues
};

// One solved, traced closed curve per exponent, shared (n, m).
std::vector<FamilyEntry> family_evolution(SpaceForm space, int n, int m,
                                          const std::vector<double>& p_list,
                                          const QuadratureConfig& cfg = {},
                                          const ClosureOptions& opts = {});

}  // namespace pelastica
