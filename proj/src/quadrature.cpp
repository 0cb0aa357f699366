#include "pelastica/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "pelastica/errors.hpp"

namespace pelastica {

namespace {

constexpr double kPi = std::numbers::pi;

// Graded subdivision of [0, pi/2]: panels shrink by a factor 4 toward both
// endpoints so that boundary layers of any double-representable width are
// resolved by a fixed decomposition.
constexpr int kPanelDepth = 44;

std::vector<double> panel_boundaries() {
    std::vector<double> left;
    left.push_back(0.0);
    double b = (kPi / 4.0) * std::pow(0.25, kPanelDepth);
    while (b < kPi / 4.0) {
        left.push_back(b);
        b *= 4.0;
    }
    left.push_back(kPi / 4.0);
    std::vector<double> all(left);
    for (auto it = left.rbegin() + 1; it != left.rend(); ++it) {
        all.push_back(kPi / 2.0 - *it);
    }
    return all;
}

const std::vector<double>& panels() {
    static const std::vector<double> b = panel_boundaries();
    return b;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw std::domain_error("gauss_legendre: order must be positive");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        // Newton on P_n from the Chebyshev-based initial guess
        double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        rule.nodes[i - 1] = -z;
        rule.nodes[n - i] = z;
        rule.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - i] = rule.weights[i - 1];
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

HalfPeriodCore::HalfPeriodCore(const ElasticaParams& params, const RootData& roots)
    : params_(params), roots_(roots), d_(roots.alpha - roots.beta) {
    const double p = params_.p;
    beta_2p_ = rpow(roots_.beta, 2.0 * p);
    beta_2pm2_ = rpow(roots_.beta, 2.0 * (p - 1.0));
    alpha_2p_ = rpow(roots_.alpha, 2.0 * p);
    alpha_2pm2_ = rpow(roots_.alpha, 2.0 * (p - 1.0));
}

double HalfPeriodCore::anchored_f_quotient(double rpow2p, double rpow2pm2,
                                           double dk_over_r) const {
    // f(kappa) = eps2 [ p^2 (k^{2(p-1)} - r^{2(p-1)}) - (p-1)^2 (k^{2p} - r^{2p}) ]
    // for a root r of f; both differences via expm1 of log1p so the simple
    // root never costs digits.
    const double p = params_.p;
    const double L = std::log1p(dk_over_r);
    const double t1 = p * p * rpow2pm2 * std::expm1(2.0 * (p - 1.0) * L);
    const double t2 = (p - 1.0) * (p - 1.0) * rpow2p * std::expm1(2.0 * p * L);
    return params_.space.eps2() * (t1 - t2);
}

double HalfPeriodCore::g(double u, double v) const {
    const double denom = d_ * d_ * u * v;
    if (u < 0.5) {
        return anchored_f_quotient(beta_2p_, beta_2pm2_, d_ * u / roots_.beta) / denom;
    }
    return anchored_f_quotient(alpha_2p_, alpha_2pm2_, -d_ * v / roots_.alpha) / denom;
}

double HalfPeriodCore::killing_norm2(double u, double v) const {
    const double p = params_.p;
    const double k = kappa(u);
    const double direct = params_.space.eps2() * params_.a + p * p * rpow(k, 2.0 * (p - 1.0));
    if (params_.space.epsilon == 1) return direct;  // -a + positive: no cancellation
    const double scale = std::abs(params_.a) + p * p * rpow(k, 2.0 * (p - 1.0));
    if (std::abs(direct) >= 1e-3 * scale) return direct;
    // near beta on H^2 the two contributions cancel; rebuild from f(beta) = 0
    const double L = std::log1p(d_ * u / roots_.beta);
    return (p - 1.0) * (p - 1.0) * beta_2p_
           + p * p * beta_2pm2_ * std::expm1(2.0 * (p - 1.0) * L);
}

double half_period_integral(const HalfPeriodCore& core, const HalfPeriodWeight& weight,
                            const QuadratureConfig& cfg, int* doublings_used) {
    if (cfg.base_nodes < 16) throw std::domain_error("QuadratureConfig: base_nodes >= 16");
    if (cfg.max_doublings < 1) throw std::domain_error("QuadratureConfig: max_doublings >= 1");
    if (!(cfg.rel_tol > 0.0)) throw std::domain_error("QuadratureConfig: rel_tol > 0");

    const auto& bounds = panels();
    auto estimate = [&](int order) {
        const GaussRule& rule = gauss_legendre(order);
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
            const double half = 0.5 * (bounds[i + 1] - bounds[i]);
            const double mid = 0.5 * (bounds[i + 1] + bounds[i]);
            double acc = 0.0;
            for (int j = 0; j < order; ++j) {
                const double t = mid + half * rule.nodes[j];
                const double st = std::sin(t), ct = std::cos(t);
                const double u = st * st, v = ct * ct;
                const double k = core.kappa(u);
                acc += rule.weights[j] * weight(k, u, v) * 2.0 / std::sqrt(core.g(u, v));
            }
            total += half * acc;
        }
        return total;
    };

    int order = std::max(4, cfg.base_nodes / 16);
    double prev = estimate(order);
    for (int level = 1; level <= cfg.max_doublings; ++level) {
        order *= 2;
        const double cur = estimate(order);
        if (std::abs(cur - prev) <= cfg.rel_tol * std::abs(cur)) {
            if (doublings_used) *doublings_used = level;
            return cur;
        }
        prev = cur;
    }
    std::ostringstream os;
    os << "half_period_integral: no convergence to rel_tol=" << cfg.rel_tol << " after "
       << cfg.max_doublings << " doublings";
    throw ConvergenceError(os.str());
}

namespace {

bool near_window_end(const ElasticaParams& params) {
    const double as = a_star(params.p, params.space);
    const double margin = 1e-8 * std::abs(as);
    return (params.a - as) < margin || (-params.a) < margin;
}

QuadEval run_weighted(const ElasticaParams& params, const QuadratureConfig& cfg,
                      double prefactor, const HalfPeriodWeight& weight) {
    validate(params);
    const RootData roots = solve_roots(params);
    const HalfPeriodCore core(params, roots);
    QuadEval out;
    out.reduced_confidence = near_window_end(params);
    out.value = prefactor * half_period_integral(core, weight, cfg, &out.doublings_used);
    return out;
}

}  // namespace

QuadEval lambda_p_eval(const ElasticaParams& params, const QuadratureConfig& cfg) {
    validate(params);
    const RootData roots = solve_roots(params);
    const HalfPeriodCore core(params, roots);
    const double p = params.p;
    const double e2 = params.space.eps2();
    // (terrible)-form denominator a + eps2 p^2 k^{2(p-1)} equals eps2 <J,J>
    QuadEval out;
    out.reduced_confidence = near_window_end(params);
    const double pref = 2.0 * p * (p - 1.0) * (p - 1.0) * std::sqrt(-params.a);
    out.value = pref
                * half_period_integral(
                      core,
                      [&](double k, double u, double v) {
                          return rpow(k, 2.0 * (p - 1.0)) / (e2 * core.killing_norm2(u, v));
                      },
                      cfg, &out.doublings_used);
    return out;
}

double lambda_p(const ElasticaParams& params, const QuadratureConfig& cfg) {
    return lambda_p_eval(params, cfg).value;
}

QuadEval period_eval(const ElasticaParams& params, const QuadratureConfig& cfg) {
    const double p = params.p;
    return run_weighted(params, cfg, 2.0, [p](double k, double, double) {
        return p * (p - 1.0) * rpow(k, p - 2.0);
    });
}

double period(const ElasticaParams& params, const QuadratureConfig& cfg) {
    return period_eval(params, cfg).value;
}

QuadEval energy_eval(const ElasticaParams& params, int m, const QuadratureConfig& cfg) {
    if (m < 1) throw std::domain_error("energy: m must be a positive integer");
    const double p = params.p;
    return run_weighted(params, cfg, 2.0 * m * p * (p - 1.0), [p](double k, double, double) {
        return rpow(k, 2.0 * (p - 1.0));
    });
}

double energy(const ElasticaParams& params, int m, const QuadratureConfig& cfg) {
    return energy_eval(params, m, cfg).value;
}

double energy_limit(double p, SpaceForm space, int m) {
    if (m < 1) throw std::domain_error("energy_limit: m must be a positive integer");
    return std::sqrt(-2.0 * a_star(p, space)) * m * kPi;
}

}  // namespace pelastica
