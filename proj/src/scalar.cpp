#include "pelastica/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pelastica/errors.hpp"

namespace pelastica {

double rpow(double x, double q) {
    if (!(x > 0.0)) {
        throw std::domain_error("rpow: base must be positive");
    }
    return std::exp(q * std::log(x));
}

bool admissible_exponent(double p, SpaceForm space) {
    return space.epsilon == 0 ? (p > 1.0) : (p < 0.0);
}

void validate(const ElasticaParams& params) {
    if (!admissible_exponent(params.p, params.space)) {
        std::ostringstream os;
        os << "inadmissible exponent p=" << params.p
           << (params.space.epsilon == 0 ? " for H^2 (needs p > 1)" : " for H^2_1 (needs p < 0)");
        throw std::domain_error(os.str());
    }
    const double as = a_star(params.p, params.space);
    if (!(params.a > as && params.a < 0.0)) {
        std::ostringstream os;
        os << "integration constant a=" << params.a << " outside the admissible window ("
           << as << ", 0)";
        throw std::domain_error(os.str());
    }
}

double a_star(double p, SpaceForm space) {
    if (!admissible_exponent(p, space)) {
        throw std::domain_error("a_star: inadmissible (p, space) pair");
    }
    const double sign = (space.epsilon == 0) ? 1.0 : -1.0;  // (-1)^epsilon
    const double b1 = sign * p;          // positive on both branches
    const double b2 = sign * (p - 1.0);  // positive on both branches
    return -std::exp(p * std::log(b1) + (1.0 - p) * std::log(b2));
}

double f_pa(double kappa, const ElasticaParams& params) {
    if (!(kappa > 0.0)) {
        throw std::domain_error("f_pa: kappa must be positive");
    }
    const double p = params.p;
    const double e2 = params.space.eps2();
    const double lk = std::log(kappa);
    return params.a - e2 * (p - 1.0) * (p - 1.0) * std::exp(2.0 * p * lk)
           + e2 * p * p * std::exp(2.0 * (p - 1.0) * lk);
}

double kappa_c(double p) {
    if (!(p > 1.0 || p < 0.0)) {
        throw std::domain_error("kappa_c: requires p > 1 or p < 0");
    }
    return std::sqrt(p / (p - 1.0));
}

double q_critical(const ElasticaParams& params) {
    if (params.space.epsilon != 1 || !(params.p < 0.0) || !(params.a < 0.0)) {
        throw std::domain_error("q_critical: defined for epsilon = 1, p < 0, a < 0");
    }
    // kappa_*^{-2p} = (1-p)/(-a)
    return rpow((1.0 - params.p) / (-params.a), -1.0 / (2.0 * params.p));
}

RootData solve_roots(const ElasticaParams& params, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("solve_roots: tol must be positive");
    validate(params);

    const double as = a_star(params.p, params.space);
    if (params.a - as < 1e-14 * std::abs(as)) {
        throw CircleDegenerateError(
            "solve_roots: a is within 1e-14|a_*| of a_*; the roots coincide and the "
            "circle solution applies");
    }

    const double kc = kappa_c(params.p);
    auto f = [&](double k) { return f_pa(k, params); };
    if (!(f(kc) > 0.0)) {
        throw BracketError("solve_roots: f_{p,a}(kappa_c) <= 0, no positive root pair");
    }

    auto bisect = [&](double neg, double pos) {
        // f(neg) < 0 < f(pos); shrink to relative width tol, root at a sign change
        for (int it = 0; it < 2000; ++it) {
            const double mid = 0.5 * (neg + pos);
            if (std::abs(pos - neg) <= tol * std::abs(mid)) return mid;
            (f(mid) < 0.0 ? neg : pos) = mid;
        }
        throw ConvergenceError("solve_roots: bisection failed to reach tolerance");
    };

    double lo = kc;
    for (int it = 0;; ++it) {
        if (it > 2000) throw BracketError("solve_roots: halving never left f > 0 (beta bracket)");
        lo *= 0.5;
        if (f(lo) < 0.0) break;
    }
    double hi = kc;
    for (int it = 0;; ++it) {
        if (it > 2000) throw BracketError("solve_roots: doubling never left f > 0 (alpha bracket)");
        hi *= 2.0;
        if (f(hi) < 0.0) break;
    }

    RootData roots;
    roots.kappa_c = kc;
    roots.beta = bisect(lo, kc);
    roots.alpha = bisect(hi, kc);
    return roots;
}

}  // namespace pelastica
