#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pelastica/elliptic.hpp"
#include "pelastica/quadrature.hpp"

using namespace pelastica;

namespace {

constexpr double kPi = std::numbers::pi;

// Brute-force oracle for R_J: with t = w^2 the defining integral becomes
// 3 int_0^inf w dw / ((w^2+p) sqrt((w^2+x)(w^2+y)(w^2+z))), regular at w = 0
// even when x = 0; mapped to a finite interval by w = tan(phi).
double rj_oracle(double x, double y, double z, double p) {
    const GaussRule& rule = gauss_legendre(4000);
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double phi = 0.25 * kPi * (rule.nodes[j] + 1.0);
        const double w = std::tan(phi), sec2 = 1.0 + w * w;
        const double f = 3.0 * w
                         / ((w * w + p)
                            * std::sqrt((w * w + x) * (w * w + y) * (w * w + z)));
        acc += rule.weights[j] * f * sec2;
    }
    return acc * 0.25 * kPi;
}

double rd_oracle(double x, double y, double z) { return rj_oracle(x, y, z, z); }

// K(zeta) from its defining integral with u = sin(phi).
double k_oracle(double zeta) {
    const GaussRule& rule = gauss_legendre(2000);
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double phi = 0.25 * kPi * (rule.nodes[j] + 1.0);
        const double s = std::sin(phi);
        acc += rule.weights[j] / std::sqrt(1.0 - zeta * zeta * s * s);
    }
    return acc * 0.25 * kPi;
}

}  // namespace

TEST_CASE("carlson_rf degenerate identities") {
    CHECK(carlson_rf(0.0, 1.0, 1.0) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
    for (double x : {0.25, 1.0, 3.5, 10.0}) {
        CHECK(carlson_rf(x, x, x) == doctest::Approx(1.0 / std::sqrt(x)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(carlson_rf(0.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(carlson_rf(-1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("carlson_rd and carlson_rj against the defining-integral oracle") {
    CHECK(carlson_rj(0.0, 1.0, 1.0, 1.0) == doctest::Approx(rj_oracle(0, 1, 1, 1)).epsilon(1e-11));
    CHECK(carlson_rj(0.0, 1.0, 1.0, 1.0) == doctest::Approx(3.0 * kPi / 4.0).epsilon(1e-13));
    CHECK(carlson_rj(0.3, 1.0, 2.0, 0.7)
          == doctest::Approx(rj_oracle(0.3, 1.0, 2.0, 0.7)).epsilon(1e-11));
    CHECK(carlson_rd(0.0, 2.0, 1.0) == doctest::Approx(rd_oracle(0.0, 2.0, 1.0)).epsilon(1e-11));
    CHECK_THROWS_AS(carlson_rj(0.0, 1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("complete integrals at zero modulus") {
    CHECK(std::abs(ellip_k(0.0) - kPi / 2.0) < 1e-13);
    CHECK(std::abs(ellip_e(0.0) - kPi / 2.0) < 1e-13);
    CHECK(std::abs(ellip_pi(0.0, 0.0) - kPi / 2.0) < 1e-13);
    CHECK_THROWS_AS(ellip_k(1.0), std::domain_error);
    CHECK_THROWS_AS(ellip_pi(1.5, 0.5), std::domain_error);
}

TEST_CASE("K at the lemniscatic point against the defining integral") {
    const double z = std::sqrt(2.0) / 2.0;
    CHECK(ellip_k(z) == doctest::Approx(k_oracle(z)).epsilon(1e-12));
    CHECK(ellip_k(z) == doctest::Approx(1.854074677301372).epsilon(1e-13));
}

TEST_CASE("Legendre relation on random moduli") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> d(0.01, 0.99);
    for (int i = 0; i < 50; ++i) {
        const double z = d(rng);
        const double zp = std::sqrt(1.0 - z * z);
        const double lhs = ellip_e(z) * ellip_k(zp) + ellip_e(zp) * ellip_k(z)
                           - ellip_k(z) * ellip_k(zp);
        CHECK(std::abs(lhs - kPi / 2.0) < 1e-12);
    }
}

TEST_CASE("Heuman's Lambda special values") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> d(0.0, 0.999);
    for (int i = 0; i < 50; ++i) {
        CHECK(std::abs(heuman_lambda(kPi / 2.0, d(rng)) - 1.0) < 1e-12);
    }
    for (double phi = 0.0; phi <= kPi / 2.0 + 1e-9; phi += kPi / 20.0) {
        CHECK(std::abs(heuman_lambda(std::min(phi, kPi / 2.0), 0.0)
                       - std::sin(std::min(phi, kPi / 2.0)))
              < 1e-12);
    }
    const double phi0 = std::asin(2.0 * std::sqrt(2.0) / 3.0);
    CHECK(heuman_lambda(phi0, 0.0) == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
    // the zeta = 0 limit must join the general path continuously
    for (double phi = 0.1; phi < 1.5; phi += 0.35) {
        CHECK(heuman_lambda(phi, 1e-8) == doctest::Approx(std::sin(phi)).epsilon(1e-7));
    }
}

TEST_CASE("Heuman identity for the complete third-kind integral") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> dz(0.05, 0.9);
    std::uniform_real_distribution<double> du(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double z = dz(rng);
        const double chi = z * z + (1.0 - z * z) * (0.02 + 0.96 * du(rng));  // z^2 < chi < 1
        const double lhs = ellip_pi(chi, z);
        const double phi = std::asin(std::sqrt((chi - z * z) / (chi * (1.0 - z * z))));
        const double rhs = kPi / 2.0 * std::sqrt(chi / ((1.0 - chi) * (chi - z * z)))
                           * heuman_lambda(phi, z);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
    }
}

TEST_CASE("cubic roots for p = 3/2 satisfy the Vieta relations") {
    const double a_lo = -1.5 * std::sqrt(3.0);
    for (int i = 1; i <= 30; ++i) {
        const double a = a_lo * i / 31.0;
        const auto [alpha, beta, delta] = cubic_roots_32(a);
        CHECK(alpha + beta + delta == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(alpha * beta + alpha * delta + beta * delta == doctest::Approx(-9.0).epsilon(1e-10));
        CHECK(alpha * beta * delta == doctest::Approx(4.0 * a).epsilon(1e-10));
    }
    // a = -2 factors as (k-1)(k^2+k-8) = 0 shifted: largest root (-1+sqrt(33))/2
    const auto r = cubic_roots_32(-2.0);
    CHECK(r.alpha == doctest::Approx(0.5 * (-1.0 + std::sqrt(33.0))).epsilon(1e-13));
    CHECK_THROWS_AS(cubic_roots_32(-3.0), std::domain_error);
    CHECK_THROWS_AS(cubic_roots_32(0.1), std::domain_error);
}

TEST_CASE("lambda_32_closed endpoint limits and monotonicity") {
    const double a_lo = -1.5 * std::sqrt(3.0);
    CHECK(std::abs(lambda_32_closed(a_lo * (1.0 - 1e-8)) - std::sqrt(2.0) * kPi) < 1e-5);
    CHECK(std::abs(lambda_32_closed(-1e-10) - kPi) < 1e-3);
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 200; ++i) {
        // log-spaced toward both endpoints
        const double x = std::exp(std::log(1e-8)
                                  + (std::log(1.0 - 1e-8) - std::log(1e-8)) * i / 199.0);
        const double val = lambda_32_closed(a_lo * (1.0 - x));
        CHECK(val < prev);
        CHECK(val > kPi);
        CHECK(val < std::sqrt(2.0) * kPi);
        prev = val;
    }
}

TEST_CASE("closed-form energies at the circle limit") {
    CHECK(std::abs(theta_m1_closed(-4.0 * (1.0 - 1e-7), 1) - 2.0 * std::sqrt(2.0) * kPi) < 1e-4);
    CHECK(std::abs(theta_m1_closed(-4.0 * (1.0 - 1e-7), 3) - 6.0 * std::sqrt(2.0) * kPi) < 3e-4);
    const double a_lo = -1.5 * std::sqrt(3.0);
    CHECK(std::abs(theta_32_closed(a_lo * (1.0 - 1e-7), 1) - std::sqrt(3.0 * std::sqrt(3.0)) * kPi)
          < 1e-4);
    CHECK_THROWS_AS(theta_m1_closed(-5.0, 1), std::domain_error);
    CHECK_THROWS_AS(theta_m1_closed(-1.0, 0), std::domain_error);
}

TEST_CASE("theta_m1 modulus at a = -1 from the quadratic formula") {
    // alpha^2 = 2+sqrt(3), beta^2 = 2-sqrt(3): zeta = sqrt(1 - beta^2/alpha^2)
    const double al2 = 2.0 + std::sqrt(3.0), be2 = 2.0 - std::sqrt(3.0);
    const double zeta = std::sqrt((al2 - be2) / al2);
    CHECK(zeta == doctest::Approx(0.9634331).epsilon(1e-6));
    // the closed form must agree with 4 m (beta/alpha^2) Pi(zeta^2, zeta) built
    // directly from those roots
    const double direct = 4.0 * std::sqrt(be2) / al2 * ellip_pi(zeta * zeta, zeta);
    CHECK(theta_m1_closed(-1.0, 1) == doctest::Approx(direct).epsilon(1e-13));
}
