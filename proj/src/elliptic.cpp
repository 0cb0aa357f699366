#include "pelastica/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pelastica/errors.hpp"

namespace pelastica {

namespace {

// Tolerances chosen so the truncated Taylor tail of each duplication series
// is far below double roundoff (tail ~ tol^6 for rf, ~ tol^6 for rd/rj).
constexpr double kRfTol = 0.001;
constexpr double kRdTol = 0.0008;
constexpr double kRjTol = 0.0008;
constexpr double kRcTol = 0.0006;
constexpr int kMaxIter = 200;

void check_rf_args(double x, double y, double z) {
    if (x < 0.0 || y < 0.0 || z < 0.0) {
        throw std::domain_error("carlson: arguments must be nonnegative");
    }
    const int zeros = (x == 0.0) + (y == 0.0) + (z == 0.0);
    if (zeros > 1) {
        throw std::domain_error("carlson: at most one argument may vanish");
    }
}

}  // namespace

double carlson_rc(double x, double y) {
    if (x < 0.0 || y <= 0.0) {
        throw std::domain_error("carlson_rc: needs x >= 0, y > 0");
    }
    double xt = x, yt = y;
    double ave = 0.0, s = 0.0;
    for (int it = 0; it < kMaxIter; ++it) {
        const double alamb = 2.0 * std::sqrt(xt) * std::sqrt(yt) + yt;
        xt = 0.25 * (xt + alamb);
        yt = 0.25 * (yt + alamb);
        ave = (xt + yt + yt) / 3.0;
        s = (yt - ave) / ave;
        if (std::abs(s) <= kRcTol) {
            const double w = s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)));
            return (1.0 + w) / std::sqrt(ave);
        }
    }
    throw ConvergenceError("carlson_rc: duplication did not converge");
}

double carlson_rf(double x, double y, double z) {
    check_rf_args(x, y, z);
    double xt = x, yt = y, zt = z;
    for (int it = 0; it < kMaxIter; ++it) {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double alamb = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + alamb);
        yt = 0.25 * (yt + alamb);
        zt = 0.25 * (zt + alamb);
        const double ave = (xt + yt + zt) / 3.0;
        const double dx = (ave - xt) / ave, dy = (ave - yt) / ave, dz = (ave - zt) / ave;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) <= kRfTol) {
            const double e2 = dx * dy - dz * dz;
            const double e3 = dx * dy * dz;
            return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(ave);
        }
    }
    throw ConvergenceError("carlson_rf: duplication did not converge");
}

double carlson_rd(double x, double y, double z) {
    check_rf_args(x, y, z);
    if (z == 0.0) throw std::domain_error("carlson_rd: z must be positive");
    double xt = x, yt = y, zt = z;
    double sum = 0.0, fac = 1.0;
    for (int it = 0; it < kMaxIter; ++it) {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double alamb = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + alamb));
        fac *= 0.25;
        xt = 0.25 * (xt + alamb);
        yt = 0.25 * (yt + alamb);
        zt = 0.25 * (zt + alamb);
        const double ave = 0.2 * (xt + yt + 3.0 * zt);
        const double dx = (ave - xt) / ave, dy = (ave - yt) / ave, dz = (ave - zt) / ave;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) <= kRdTol) {
            const double ea = dx * dy;
            const double eb = dz * dz;
            const double ec = ea - eb;
            const double ed = ea - 6.0 * eb;
            const double ee = ed + ec + ec;
            const double c1 = 3.0 / 14.0, c2 = 1.0 / 6.0, c3 = 9.0 / 22.0, c4 = 3.0 / 26.0;
            const double poly = 1.0 + ed * (-c1 + 0.25 * c3 * ed - 1.5 * c4 * dz * ee)
                                + dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea));
            return 3.0 * sum + fac * poly / (ave * std::sqrt(ave));
        }
    }
    throw ConvergenceError("carlson_rd: duplication did not converge");
}

double carlson_rj(double x, double y, double z, double w) {
    check_rf_args(x, y, z);
    if (!(w > 0.0)) throw std::domain_error("carlson_rj: w must be positive");
    double xt = x, yt = y, zt = z, pt = w;
    double sum = 0.0, fac = 1.0;
    for (int it = 0; it < kMaxIter; ++it) {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double alamb = sx * (sy + sz) + sy * sz;
        const double alpha = (pt * (sx + sy + sz) + sx * sy * sz);
        const double beta = pt * (pt + alamb) * (pt + alamb);
        sum += fac * carlson_rc(alpha * alpha, beta);
        fac *= 0.25;
        xt = 0.25 * (xt + alamb);
        yt = 0.25 * (yt + alamb);
        zt = 0.25 * (zt + alamb);
        pt = 0.25 * (pt + alamb);
        const double ave = 0.2 * (xt + yt + zt + 2.0 * pt);
        const double dx = (ave - xt) / ave, dy = (ave - yt) / ave;
        const double dz = (ave - zt) / ave, dp = (ave - pt) / ave;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz), std::abs(dp)}) <= kRjTol) {
            const double ea = dx * (dy + dz) + dy * dz;
            const double eb = dx * dy * dz;
            const double ec = dp * dp;
            const double ed = ea - 3.0 * ec;
            const double ee = eb + 2.0 * dp * (ea - ec);
            const double c1 = 3.0 / 14.0, c2 = 1.0 / 3.0, c3 = 3.0 / 22.0, c4 = 3.0 / 26.0;
            const double poly = 1.0 + ed * (-c1 + 0.75 * c3 * ed - 1.5 * c4 * ee)
                                + eb * (0.5 * c2 + dp * (-c3 - c3 + dp * c4))
                                + dp * ea * (c2 - dp * c3) - c2 * dp * ec;
            return 3.0 * sum + fac * poly / (ave * std::sqrt(ave));
        }
    }
    throw ConvergenceError("carlson_rj: duplication did not converge");
}

namespace {

void check_modulus(double zeta) {
    if (!(zeta >= 0.0 && zeta < 1.0)) {
        throw std::domain_error("elliptic: modulus must satisfy 0 <= zeta < 1");
    }
}

}  // namespace

double ellip_k(double zeta) {
    check_modulus(zeta);
    return carlson_rf(0.0, 1.0 - zeta * zeta, 1.0);
}

double ellip_e(double zeta) {
    check_modulus(zeta);
    const double y = 1.0 - zeta * zeta;
    return carlson_rf(0.0, y, 1.0) - zeta * zeta / 3.0 * carlson_rd(0.0, y, 1.0);
}

double ellip_pi(double chi, double zeta) {
    check_modulus(zeta);
    if (!(chi < 1.0)) throw std::domain_error("ellip_pi: requires chi < 1");
    const double y = 1.0 - zeta * zeta;
    return carlson_rf(0.0, y, 1.0) + chi / 3.0 * carlson_rj(0.0, y, 1.0, 1.0 - chi);
}

double ellip_f_inc(double phi, double zeta) {
    check_modulus(zeta);
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2.0 + 1e-12)) {
        throw std::domain_error("ellip_f_inc: requires 0 <= phi <= pi/2");
    }
    const double s = std::sin(phi), c = std::cos(phi);
    if (s == 0.0) return 0.0;
    return s * carlson_rf(c * c, 1.0 - zeta * zeta * s * s, 1.0);
}

double ellip_e_inc(double phi, double zeta) {
    check_modulus(zeta);
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2.0 + 1e-12)) {
        throw std::domain_error("ellip_e_inc: requires 0 <= phi <= pi/2");
    }
    const double s = std::sin(phi), c = std::cos(phi);
    if (s == 0.0) return 0.0;
    const double q = 1.0 - zeta * zeta * s * s;
    return s * carlson_rf(c * c, q, 1.0)
           - zeta * zeta * s * s * s / 3.0 * carlson_rd(c * c, q, 1.0);
}

double heuman_lambda(double phi, double zeta) {
    check_modulus(zeta);
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2.0 + 1e-12)) {
        throw std::domain_error("heuman_lambda: requires 0 <= phi <= pi/2");
    }
    // zeta = 0 makes the complementary modulus 1 and the two F terms cancel;
    // the finite limit is sin(phi)
    if (zeta == 0.0) return std::sin(std::min(phi, std::numbers::pi / 2.0));
    const double zp = std::sqrt((1.0 - zeta) * (1.0 + zeta));
    return 2.0 / std::numbers::pi
           * (ellip_e(zeta) * ellip_f_inc(phi, zp) + ellip_k(zeta) * ellip_e_inc(phi, zp)
              - ellip_k(zeta) * ellip_f_inc(phi, zp));
}

Cubic32Roots cubic_roots_32(double a) {
    const double a_lo = -1.5 * std::sqrt(3.0);
    if (!(a > a_lo && a < 0.0)) {
        throw std::domain_error("cubic_roots_32: a outside (-3 sqrt(3)/2, 0)");
    }
    // a(alpha) = alpha (alpha^2 - 9)/4 is increasing on (sqrt(3), 3)
    double lo = std::sqrt(3.0), hi = 3.0;
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mid * (mid * mid - 9.0) / 4.0 < a ? lo : hi) = mid;
    }
    const double alpha = 0.5 * (lo + hi);
    // middle root, rationalized so the a -> 0 limit keeps full precision
    const double disc = std::sqrt(36.0 - 3.0 * alpha * alpha);
    const double beta = -8.0 * a / (alpha * (disc + alpha));
    return {alpha, beta, -(alpha + beta)};
}

double lambda_32_closed(double a) {
    const auto [alpha, beta, delta] = cubic_roots_32(a);
    (void)delta;
    const double zeta2 = (alpha - beta) / (2.0 * alpha + beta);
    const double denom = alpha * (9.0 - beta * (alpha + beta));
    const double chi = 9.0 * (alpha - beta) / denom;
    const double one_m_chi = beta * beta * beta / denom;  // via 4a + alpha^2 beta = -alpha beta^2
    const double x2 = (chi - zeta2) / (chi * (1.0 - zeta2));
    const double one_m_x2 = zeta2 * one_m_chi / (chi * (1.0 - zeta2));
    const double phi = std::atan2(std::sqrt(x2), std::sqrt(one_m_x2));
    const double zeta = std::sqrt(zeta2);
    return 2.0 * std::sqrt(alpha * beta * (alpha + beta)) / (3.0 * std::sqrt(2.0 * alpha + beta))
               * ellip_k(zeta)
           + std::numbers::pi * heuman_lambda(phi, zeta);
}

double theta_m1_closed(double a, int m) {
    if (!(a > -4.0 && a < 0.0)) {
        throw std::domain_error("theta_m1_closed: a outside (-4, 0)");
    }
    if (m < 1) throw std::domain_error("theta_m1_closed: m must be positive");
    // roots of a k^4 + 4 k^2 - 1: alpha^2 = (2+s)/(-a), beta^2 = 1/(2+s), s = sqrt(4+a)
    const double s = std::sqrt(4.0 + a);
    const double zeta2 = 2.0 * s / (2.0 + s);  // (alpha^2 - beta^2)/alpha^2, cancellation-free
    const double beta_over_alpha2 = -a / ((2.0 + s) * std::sqrt(2.0 + s));
    return 4.0 * m * beta_over_alpha2 * ellip_pi(zeta2, std::sqrt(zeta2));
}

double theta_32_closed(double a, int m) {
    if (m < 1) throw std::domain_error("theta_32_closed: m must be positive");
    const auto [alpha, beta, delta] = cubic_roots_32(a);
    (void)delta;
    const double root = std::sqrt(2.0 * alpha + beta);
    const double zeta = std::sqrt((alpha - beta) / (2.0 * alpha + beta));
    return 6.0 * m * (root * ellip_e(zeta) - (alpha + beta) / root * ellip_k(zeta));
}

}  // namespace pelastica
