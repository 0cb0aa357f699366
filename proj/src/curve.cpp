#include "pelastica/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "pelastica/errors.hpp"

namespace pelastica {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kCellOrder = 6;  // per-cell Gauss order for the cumulative maps

double f_prime_at_root(const ElasticaParams& params, double root) {
    const double p = params.p;
    return 2.0 * params.space.eps2() * p * (p - 1.0) * rpow(root, 2.0 * p - 3.0)
           * (p - (p - 1.0) * root * root);
}

// g with the exact endpoint limits g(0,v) = f'(beta)/(d v), g(u,0) = -f'(alpha)/(d u).
double g_value(const HalfPeriodCore& core, const ElasticaParams& params, double u, double v) {
    const double d = core.width();
    if (u == 0.0) return f_prime_at_root(params, core.roots().beta) / (d * v);
    if (v == 0.0) return -f_prime_at_root(params, core.roots().alpha) / (d * u);
    return core.g(u, v);
}

}  // namespace

CircleData circle(double p, SpaceForm space) {
    if (!admissible_exponent(p, space)) {
        throw std::domain_error("circle: inadmissible exponent for this space");
    }
    const double sign = (space.epsilon == 0) ? 1.0 : -1.0;  // (-1)^epsilon
    CircleData c;
    c.kappa = std::sqrt(p / (p - 1.0));
    c.radius_L3 = std::sqrt(sign * (p - 1.0));
    const double h = std::sqrt(sign * p);
    c.height_z = (space.epsilon == 0) ? h : -h;  // bottom half on H^2_1
    return c;
}

std::pair<double, double> bounding_parallels(const ElasticaParams& params, const RootData& roots) {
    validate(params);
    const double c = std::sqrt(-params.a);
    const double z1 = params.p * rpow(roots.beta, params.p - 1.0) / c;
    const double z2 = params.p * rpow(roots.alpha, params.p - 1.0) / c;
    return std::minmax(z1, z2);
}

CurveModel::CurveModel(const ElasticaParams& params, int cells_per_half_period)
    : params_(params), roots_((validate(params), solve_roots(params))), core_(params, roots_) {
    if (cells_per_half_period < 8) {
        throw std::domain_error("CurveModel: need at least 8 cells per half-period");
    }
    const int n = cells_per_half_period;
    t_.resize(n + 1);
    s_.resize(n + 1);
    th_.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        // Chebyshev spacing clusters anchors near both turning parallels
        t_[j] = (kPi / 4.0) * (1.0 - std::cos(kPi * j / n));
    }
    t_.front() = 0.0;
    t_.back() = kPi / 2.0;
    s_[0] = 0.0;
    th_[0] = 0.0;
    for (int j = 1; j <= n; ++j) {
        s_[j] = s_[j - 1] + cell_integral(t_[j - 1], t_[j], false);
        th_[j] = th_[j - 1] + cell_integral(t_[j - 1], t_[j], true);
    }
    rho_ = 2.0 * s_.back();
    lam_ = 2.0 * th_.back();
}

CurveModel::Rates CurveModel::rates(double t) const {
    const double st = std::sin(t), ct = std::cos(t);
    const double u = st * st, v = ct * ct;
    const double k = core_.kappa(u);
    const double g = g_value(core_, params_, u, v);
    const double p = params_.p;
    const double ds_dt = 2.0 * p * (p - 1.0) * rpow(k, p - 2.0) / std::sqrt(g);
    const double R2 = core_.killing_norm2(u, v);
    if (!(R2 > 0.0)) {
        throw ConvergenceError("CurveModel: Killing norm <J,J> failed to stay positive");
    }
    const double thp = params_.space.eps2() * (p - 1.0) * std::sqrt(-params_.a) * rpow(k, p) / R2;
    return {ds_dt, thp * ds_dt};
}

double CurveModel::cell_integral(double t0, double t1, bool theta) const {
    const GaussRule& rule = gauss_legendre(kCellOrder);
    const double half = 0.5 * (t1 - t0), mid = 0.5 * (t1 + t0);
    double acc = 0.0;
    for (int j = 0; j < kCellOrder; ++j) {
        const Rates r = rates(mid + half * rule.nodes[j]);
        acc += rule.weights[j] * (theta ? r.dtheta_dt : r.ds_dt);
    }
    return half * acc;
}

double CurveModel::s_of_t(double t) const {
    if (!(t >= 0.0 && t <= kPi / 2.0)) throw std::domain_error("s_of_t: t outside [0, pi/2]");
    const auto it = std::upper_bound(t_.begin(), t_.end(), t);
    const std::size_t j = std::max<std::ptrdiff_t>(1, it - t_.begin()) - 1;
    return s_[j] + cell_integral(t_[j], t, false);
}

double CurveModel::theta_of_t(double t) const {
    if (!(t >= 0.0 && t <= kPi / 2.0)) throw std::domain_error("theta_of_t: t outside [0, pi/2]");
    const auto it = std::upper_bound(t_.begin(), t_.end(), t);
    const std::size_t j = std::max<std::ptrdiff_t>(1, it - t_.begin()) - 1;
    return th_[j] + cell_integral(t_[j], t, true);
}

double CurveModel::t_of_s(double s_half) const {
    if (!(s_half >= 0.0 && s_half <= rho_ / 2.0 + 1e-12 * rho_)) {
        throw std::domain_error("t_of_s: arc length outside [0, rho/2]");
    }
    if (s_half <= 0.0) return 0.0;
    if (s_half >= rho_ / 2.0) return kPi / 2.0;
    const double target = std::clamp(s_half, 0.0, rho_ / 2.0);
    const auto it = std::upper_bound(s_.begin(), s_.end(), target);
    std::size_t j = std::max<std::ptrdiff_t>(1, it - s_.begin()) - 1;
    double lo = t_[j], hi = (j + 1 < t_.size()) ? t_[j + 1] : kPi / 2.0;
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 100; ++iter) {
        const double err = s_of_t(t) - target;
        if (std::abs(err) <= 1e-15 * (1.0 + rho_)) break;
        (err > 0.0 ? hi : lo) = t;
        const double step = err / rates(t).ds_dt;
        double next = t - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        t = next;
    }
    return t;
}

CurveSample CurveModel::eval_at_t(double t) const {
    const double st = std::sin(t), ct = std::cos(t);
    const double u = st * st, v = ct * ct;
    const double k = core_.kappa(u);
    const double g = g_value(core_, params_, u, v);
    const double p = params_.p;
    const double sqrt_f = core_.width() * std::sqrt(u * v * g);
    const double R2 = core_.killing_norm2(u, v);
    if (!(R2 > 0.0)) {
        throw ConvergenceError("CurveModel: Killing norm <J,J> failed to stay positive");
    }
    CurveSample out;
    out.s = s_of_t(t);
    out.kappa = k;
    out.kappa_prime = rpow(k, 2.0 - p) * sqrt_f / (p * (p - 1.0));
    out.theta = theta_of_t(t);
    const double c = std::sqrt(-params_.a);
    const double radial = std::sqrt(R2) / c;
    out.gamma = {radial * std::cos(out.theta), radial * std::sin(out.theta),
                 p * rpow(k, p - 1.0) / c};
    return out;
}

CurveSample CurveModel::eval(double s) const {
    double cycles = std::floor(s / rho_);
    double r = s - cycles * rho_;
    if (r < 0.0) {  // guard fp edge of floor
        r += rho_;
        cycles -= 1.0;
    }
    bool mirrored = false;
    if (r > rho_ / 2.0) {
        r = rho_ - r;
        mirrored = true;
    }
    CurveSample out = eval_at_t(t_of_s(r));
    if (mirrored) {
        out.kappa_prime = -out.kappa_prime;
        out.theta = lam_ - out.theta;
    }
    out.theta += cycles * lam_;
    out.s = s;
    const double radial = std::hypot(out.gamma.x, out.gamma.y);
    out.gamma.x = radial * std::cos(out.theta);
    out.gamma.y = radial * std::sin(out.theta);
    return out;
}

std::vector<ProfileSample> curvature_profile(const ElasticaParams& params, const RootData& roots,
                                             int n_samples, int m, const QuadratureConfig& cfg) {
    (void)cfg;
    (void)roots;
    if (n_samples < 8) throw std::domain_error("curvature_profile: n_samples >= 8 per half-period");
    if (m < 1) throw std::domain_error("curvature_profile: m must be positive");
    CurveModel model(params, n_samples);
    const auto& t = model.anchors_t();
    const int n = static_cast<int>(t.size()) - 1;
    const double rho = model.period();
    std::vector<ProfileSample> half(n + 1);
    for (int j = 0; j <= n; ++j) {
        const CurveSample cs = model.eval_at_t(t[j]);
        half[j] = {cs.s, cs.kappa, cs.kappa_prime};
    }
    std::vector<ProfileSample> out;
    out.reserve(2 * n * m + 1);
    for (int period = 0; period < m; ++period) {
        const double s0 = period * rho;
        for (int j = (period == 0 ? 0 : 1); j <= n; ++j) {
            out.push_back({s0 + half[j].s, half[j].kappa, half[j].kappa_prime});
        }
        for (int j = n - 1; j >= 0; --j) {
            out.push_back({s0 + rho - half[j].s, half[j].kappa, -half[j].kappa_prime});
        }
    }
    return out;
}

Trace trace(const ElasticaParams& params, int m, int n_samples, const QuadratureConfig& cfg) {
    (void)cfg;
    if (m < 1) throw std::domain_error("trace: m must be positive");
    if (n_samples < 8) throw std::domain_error("trace: n_samples >= 8 per half-period");
    CurveModel model(params, n_samples);

    Trace tr;
    tr.params = params;
    tr.roots = model.roots();
    tr.period_rho = model.period();
    tr.lambda = model.lambda();
    tr.m = m;

    const auto& t = model.anchors_t();
    const int n = static_cast<int>(t.size()) - 1;
    const double rho = model.period(), lam = model.lambda();

    std::vector<CurveSample> half(n + 1);
    for (int j = 0; j <= n; ++j) half[j] = model.eval_at_t(t[j]);

    auto place = [&](const CurveSample& base, double s, double kp, double theta) {
        CurveSample cs;
        cs.s = s;
        cs.kappa = base.kappa;
        cs.kappa_prime = kp;
        cs.theta = theta;
        const double radial = std::hypot(base.gamma.x, base.gamma.y);
        cs.gamma = {radial * std::cos(theta), radial * std::sin(theta), base.gamma.z};
        return cs;
    };

    tr.samples.reserve(2 * n * m + 1);
    for (int period = 0; period < m; ++period) {
        const double s0 = period * rho, th0 = period * lam;
        for (int j = (period == 0 ? 0 : 1); j <= n; ++j) {
            tr.samples.push_back(
                place(half[j], s0 + half[j].s, half[j].kappa_prime, th0 + half[j].theta));
        }
        // mirrored half: kappa(rho - s) = kappa(s), theta(rho - s) = Lambda - theta(s)
        for (int j = n - 1; j >= 0; --j) {
            tr.samples.push_back(place(half[j], s0 + rho - half[j].s, -half[j].kappa_prime,
                                       th0 + lam - half[j].theta));
        }
    }
    return tr;
}

ClosureResult solve_closure(double p, SpaceForm space, int n, int m, const QuadratureConfig& cfg,
                            const ClosureOptions& opts) {
    if (n < 1 || m < 1) throw std::domain_error("solve_closure: n, m must be positive");
    if (std::gcd(n, m) != 1) throw std::domain_error("solve_closure: n and m must be coprime");
    // m < 2n < sqrt(2) m, checked in exact integer arithmetic
    const long long nn = n, mm = m;
    if (!(mm < 2 * nn && 2 * nn * nn < mm * mm)) {
        std::ostringstream os;
        os << "solve_closure: (n, m) = (" << n << ", " << m
           << ") violates the closure window m < 2n < sqrt(2) m";
        throw std::domain_error(os.str());
    }
    if (!admissible_exponent(p, space)) {
        throw std::domain_error("solve_closure: inadmissible exponent for this space");
    }

    const double target = 2.0 * kPi * n / m;
    const double as = a_star(p, space);
    auto lam_at = [&](double a) { return lambda_p({space, p, a}, cfg); };

    double lo = 0.0, hi = 0.0, f_lo = 0.0, f_hi = 0.0;
    bool bracketed = false;
    for (double delta : {1e-7, 1e-8, 1e-9}) {
        lo = as * (1.0 - delta);  // Lambda near sqrt(2) pi
        hi = as * delta;          // Lambda near pi
        f_lo = lam_at(lo);
        f_hi = lam_at(hi);
        if (f_lo > target && target > f_hi) {
            bracketed = true;
            break;
        }
    }
    if (!bracketed) {
        std::ostringstream os;
        os << "solve_closure: target 2 pi " << n << "/" << m << " = " << target
           << " not straddled; Lambda(" << lo << ") = " << f_lo << ", Lambda(" << hi
           << ") = " << f_hi;
        throw BracketError(os.str());
    }

    ClosureResult res;
    res.n = n;
    res.m = m;
    res.q = static_cast<double>(n) / m;
    double mid = 0.5 * (lo + hi), f_mid = lam_at(mid);
    for (int it = 0; it < 300 && std::abs(f_mid - target) > opts.lambda_tol; ++it) {
        if (f_mid > f_lo || f_mid < f_hi) res.monotone_bracket = false;
        if (f_mid > target) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        mid = 0.5 * (lo + hi);
        f_mid = lam_at(mid);
    }
    if (std::abs(f_mid - target) > opts.lambda_tol) {
        throw ConvergenceError("solve_closure: bisection on a did not reach the Lambda tolerance");
    }
    res.a_q = mid;
    res.lambda_at_aq = f_mid;

    const Trace tr = trace({space, p, mid}, m, opts.trace_samples, cfg);
    const Vec3L d = tr.samples.back().gamma - tr.samples.front().gamma;
    res.closure_defect = std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)});
    return res;
}

std::vector<FamilyEntry> family_evolution(SpaceForm space, int n, int m,
                                          const std::vector<double>& p_list,
                                          const QuadratureConfig& cfg,
                                          const ClosureOptions& opts) {
    std::vector<FamilyEntry> out;
    out.reserve(p_list.size());
    for (double p : p_list) {
        FamilyEntry entry;
        entry.p = p;
        try {
            entry.closure = solve_closure(p, space, n, m, cfg, opts);
            entry.curve = trace({space, p, entry.closure->a_q}, m, opts.trace_samples, cfg);
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace pelastica
