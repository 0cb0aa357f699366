#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pelastica/scalar.hpp"

namespace pelastica {

struct QuadratureConfig {
    int base_nodes = 64;      // Gauss-Legendre node budget at the first level
    int max_doublings = 6;    // levels of node doubling before giving up
    double rel_tol = 1e-11;   // successive-estimate agreement target
};

struct QuadEval {
    double value = 0.0;
    int doublings_used = 0;
    // Set when a sits within 1e-8 |a_*| of either window endpoint; the value
    // is still returned but limits are approached, never attained.
    bool reduced_confidence = false;
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]; cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

// Shared machinery for the substitution kappa(t) = beta + (alpha-beta) sin^2 t,
// which absorbs the square-root vanishing of f_{p,a} at both roots. All
// curvature-space quantities are expressed in u = sin^2 t, v = cos^2 t so the
// endpoint neighborhoods never lose precision to cancellation.
class HalfPeriodCore {
public:
    HalfPeriodCore(const ElasticaParams& params, const RootData& roots);

    const ElasticaParams& params() const { return params_; }
    const RootData& roots() const { return roots_; }
    double width() const { return d_; }

    double kappa(double u) const { return roots_.beta + d_ * u; }

    // g = f_{p,a} / ((kappa-beta)(alpha-kappa)), strictly positive on [0, 1];
    // evaluated through power differences anchored at the nearer root.
    double g(double u, double v) const;

    // <J,J> = eps2 a + p^2 kappa^{2(p-1)} (also the squared planar radius
    // scaled by -a); stable against the near-beta cancellation on H^2.
    double killing_norm2(double u, double v) const;

    // d kappa / dt = (alpha-beta) sin 2t expressed via u, v.
    double dkappa_dt(double u, double v) const { return 2.0 * d_ * std::sqrt(u * v); }

private:
    double anchored_f_quotient(double rpow2p, double rpow2pm2, double dk_over_r) const;

    ElasticaParams params_;
    RootData roots_;
    double d_;
    double beta_2p_, beta_2pm2_;    // beta^{2p}, beta^{2(p-1)}
    double alpha_2p_, alpha_2pm2_;  // alpha^{2p}, alpha^{2(p-1)}
};

// Integrand weight in t-space; receives kappa, u = sin^2 t, v = cos^2 t.
using HalfPeriodWeight = std::function<double(double kappa, double u, double v)>;

// integral_0^{pi/2} W(kappa(t)) * 2/sqrt(g) dt over a graded panel
// decomposition of [0, pi/2] (ratio-4 refinement toward both ends), with the
// per-panel Gauss order doubled until two successive estimates agree.
double half_period_integral(const HalfPeriodCore& core, const HalfPeriodWeight& weight,
                            const QuadratureConfig& cfg, int* doublings_used = nullptr);

// Closure function Lambda_p(a): angular progression over one curvature period.
QuadEval lambda_p_eval(const ElasticaParams& params, const QuadratureConfig& cfg = {});
double lambda_p(const ElasticaParams& params, const QuadratureConfig& cfg = {});

// Least period rho(a) of the curvature.
QuadEval period_eval(const ElasticaParams& params, const QuadratureConfig& cfg = {});
double period(const ElasticaParams& params, const QuadratureConfig& cfg = {});

// p-elastic energy of a curve closing in m curvature periods.
QuadEval energy_eval(const ElasticaParams& params, int m, const QuadratureConfig& cfg = {});
double energy(const ElasticaParams& params, int m, const QuadratureConfig& cfg = {});

// Closed-form limit of the energy as a -> a_*: sqrt(-2 a_*) m pi.
double energy_limit(double p, SpaceForm space, int m);

}  // namespace pelastica
