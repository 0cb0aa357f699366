#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pelastica/curve.hpp"
#include "pelastica/errors.hpp"
#include "pelastica/quadrature.hpp"

using namespace pelastica;

namespace {
constexpr double kPi = std::numbers::pi;
const SpaceForm kH2 = SpaceForm::hyperbolic();
const SpaceForm kH12 = SpaceForm::de_sitter();

double quadric_residual(const Vec3L& v, SpaceForm space) {
    return std::abs(minkowski_inner(v, v) + space.eps2());
}
}  // namespace

TEST_CASE("circle solutions") {
    const CircleData c2 = circle(2.0, kH2);
    CHECK(c2.kappa == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(c2.radius_L3 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c2.height_z == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    // the parallel x^2 + y^2 = r^2 at height z lies on the quadric
    CHECK(c2.radius_L3 * c2.radius_L3 - c2.height_z * c2.height_z
          == doctest::Approx(-1.0).epsilon(1e-12));

    const CircleData cm1 = circle(-1.0, kH12);
    CHECK(cm1.kappa == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(cm1.radius_L3 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(cm1.height_z == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(cm1.radius_L3 * cm1.radius_L3 - cm1.height_z * cm1.height_z
          == doctest::Approx(1.0).epsilon(1e-12));

    // p -> 1+ degenerates to the pole
    CHECK(circle(1.0 + 1e-6, kH2).radius_L3 < 2e-3);
    CHECK_THROWS_AS(circle(0.5, kH2), std::domain_error);
}

TEST_CASE("curve model turning points and angular progression") {
    const ElasticaParams params{kH2, 2.0, -1.0};
    CurveModel model(params, 64);
    const RootData& r = model.roots();

    const CurveSample at0 = model.eval(0.0);
    CHECK(at0.kappa == r.beta);
    CHECK(at0.kappa_prime == 0.0);
    CHECK(at0.theta == 0.0);

    const CurveSample at_half = model.eval(model.period() / 2.0);
    CHECK(at_half.kappa == doctest::Approx(r.alpha).epsilon(1e-12));
    CHECK(std::abs(at_half.kappa_prime) < 1e-6);

    // two independent integration paths for the angle over one period
    CHECK(model.eval(model.period()).theta
          == doctest::Approx(lambda_p(params)).epsilon(1e-10));
    CHECK(model.period() == doctest::Approx(period(params)).epsilon(1e-10));
}

TEST_CASE("trace invariants on both quadrics") {
    for (const auto& params : {ElasticaParams{kH2, 1.5, -1.419}, ElasticaParams{kH12, -1.0, -0.254}}) {
        const Trace tr = trace(params, 2, 64);
        REQUIRE(tr.samples.size() == 2u * 2u * 64u + 1u);
        double prev_s = -1.0, prev_theta = -1.0;
        for (const auto& cs : tr.samples) {
            CHECK(quadric_residual(cs.gamma, params.space) < 1e-11);
            CHECK(cs.s > prev_s);
            CHECK(cs.theta > prev_theta);
            prev_s = cs.s;
            prev_theta = cs.theta;
            CHECK(cs.kappa >= tr.roots.beta - 1e-12);
            CHECK(cs.kappa <= tr.roots.alpha + 1e-12);
            if (params.space.epsilon == 1) CHECK(cs.gamma.z < 0.0);
            // never meets the pole: the planar radius stays positive
            if (params.space.epsilon == 0) CHECK(std::hypot(cs.gamma.x, cs.gamma.y) > 1e-3);
        }
        CHECK(tr.samples.front().s == 0.0);
        CHECK(tr.samples.back().s == doctest::Approx(2.0 * tr.period_rho).epsilon(1e-12));
    }
}

TEST_CASE("unit speed from finite differences of the model") {
    for (const auto& params : {ElasticaParams{kH2, 2.0, -1.0}, ElasticaParams{kH12, -2.0, -1.5}}) {
        CurveModel model(params, 64);
        const double h = 1e-4 * model.period();
        for (double frac : {0.07, 0.23, 0.5, 0.69, 0.91, 1.37}) {
            const double s = frac * model.period();
            const Vec3L g2p = model.eval(s + 2 * h).gamma, g1p = model.eval(s + h).gamma;
            const Vec3L g1m = model.eval(s - h).gamma, g2m = model.eval(s - 2 * h).gamma;
            const Vec3L gp = (1.0 / (12.0 * h)) * ((-1.0) * g2p + 8.0 * g1p + (-8.0) * g1m + g2m);
            CHECK(minkowski_inner(gp, gp) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("bounding parallels") {
    const ElasticaParams params{kH2, 2.0, -1.0};
    const RootData roots = solve_roots(params);
    const auto [z_lo, z_hi] = bounding_parallels(params, roots);
    CHECK(z_lo == doctest::Approx(2.0 * std::sqrt(2.0 - std::sqrt(3.0))).epsilon(1e-12));
    CHECK(z_hi == doctest::Approx(2.0 * std::sqrt(2.0 + std::sqrt(3.0))).epsilon(1e-12));

    // trace extrema of z coincide with the parallels
    const Trace tr = trace(params, 1, 128);
    double zmin = 1e300, zmax = -1e300;
    for (const auto& cs : tr.samples) {
        zmin = std::min(zmin, cs.gamma.z);
        zmax = std::max(zmax, cs.gamma.z);
    }
    CHECK(zmin == doctest::Approx(z_lo).epsilon(1e-9));
    CHECK(zmax == doctest::Approx(z_hi).epsilon(1e-9));

    // near a_* both parallels merge at the circle height
    const double as = a_star(2.0, kH2);
    const ElasticaParams near_circ{kH2, 2.0, as * (1.0 - 1e-10)};
    const auto [w_lo, w_hi] = bounding_parallels(near_circ, solve_roots(near_circ));
    CHECK(w_lo == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
    CHECK(w_hi == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
}

TEST_CASE("solve_closure reproduces the frozen closure constants") {
    const ClosureResult r1 = solve_closure(1.5, kH2, 2, 3);
    CHECK(r1.lambda_at_aq == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-10));
    CHECK(r1.a_q == doctest::Approx(-1.418997613036519).epsilon(1e-7));
    CHECK(r1.closure_defect < 1e-6);
    CHECK(r1.monotone_bracket);

    const ClosureResult r2 = solve_closure(-1.0, kH12, 3, 5);
    CHECK(r2.lambda_at_aq == doctest::Approx(6.0 * kPi / 5.0).epsilon(1e-10));
    CHECK(r2.a_q == doctest::Approx(-0.254050930522078).epsilon(1e-7));
    CHECK(r2.closure_defect < 1e-6);

    const ClosureResult r3 = solve_closure(2.0, kH2, 2, 3);
    CHECK(r3.a_q == doctest::Approx(-1.564882860085427).epsilon(1e-7));
}

TEST_CASE("solve_closure rejects out-of-window pairs") {
    CHECK_THROWS_AS(solve_closure(1.5, kH2, 1, 2), std::domain_error);   // 2n = m
    CHECK_THROWS_AS(solve_closure(1.5, kH2, 1, 1), std::domain_error);   // 2n^2 >= m^2
    CHECK_THROWS_AS(solve_closure(1.5, kH2, 4, 6), std::domain_error);   // gcd 2
    CHECK_THROWS_AS(solve_closure(1.5, kH2, 5, 7), std::domain_error);   // 2n too large
    CHECK_THROWS_AS(solve_closure(0.5, kH2, 2, 3), std::domain_error);   // p inadmissible
    // boundary acceptance: (7,10) satisfies 2*49 = 98 < 100
    const ClosureResult r = solve_closure(-1.0, kH12, 7, 10);
    CHECK(r.lambda_at_aq == doctest::Approx(2.0 * kPi * 0.7).epsilon(1e-10));
}

TEST_CASE("closure defect shrinks under sample refinement") {
    const ClosureResult res = solve_closure(1.5, kH2, 2, 3);
    const ElasticaParams params{kH2, 1.5, res.a_q};
    double prev = 1e300;
    for (int cells : {8, 16, 256}) {
        const Trace tr = trace(params, 3, cells);
        const Vec3L d = tr.samples.back().gamma - tr.samples.front().gamma;
        const double defect = std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)});
        CHECK((defect <= prev || defect < 1e-9));
        prev = defect;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("family evolution expands with the exponent") {
    const auto h2_family = family_evolution(kH2, 2, 3, {1.1, 2.0, 7.0, 15.0}, {}, {1e-10, 64});
    REQUIRE(h2_family.size() == 4);
    double prev_extent = 0.0;
    for (const auto& entry : h2_family) {
        REQUIRE(entry.error.empty());
        double extent = 0.0;
        for (const auto& cs : entry.curve->samples) {
            extent = std::max(extent, std::hypot(cs.gamma.x, cs.gamma.y));
        }
        CHECK(extent > prev_extent);
        prev_extent = extent;
    }

    const auto h12_family = family_evolution(kH12, 2, 3, {-9.0, -5.0, -2.0, -0.5}, {}, {1e-10, 64});
    prev_extent = 0.0;
    for (const auto& entry : h12_family) {
        REQUIRE(entry.error.empty());
        double extent = 0.0;
        for (const auto& cs : entry.curve->samples) {
            const auto [X, Y] = punctured_project(cs.gamma);
            extent = std::max(extent, std::hypot(X, Y));
        }
        CHECK(extent > prev_extent);
        prev_extent = extent;
    }

    // circle radii are monotone along the same exponent lists
    double prev_r = 0.0;
    for (double p : {1.1, 2.0, 7.0, 15.0}) {
        const double r = circle(p, kH2).radius_L3;
        CHECK(r > prev_r);
        prev_r = r;
    }
    prev_r = 0.0;
    for (double p : {-9.0, -5.0, -2.0, -0.5}) {
        const double r = circle(p, kH12).radius_L3;
        CHECK((p == -9.0 || r < prev_r));  // decreasing toward 1 as p -> 0-
        prev_r = r;
    }
}

TEST_CASE("family evolution collects per-exponent failures") {
    const auto fam = family_evolution(kH2, 2, 3, {2.0, 0.5}, {}, {1e-10, 64});
    REQUIRE(fam.size() == 2);
    CHECK(fam[0].error.empty());
    CHECK_FALSE(fam[1].error.empty());
    CHECK_FALSE(fam[1].curve.has_value());
}

TEST_CASE("curvature profile over periods") {
    const ElasticaParams params{kH12, -1.0, -1.0};
    const RootData roots = solve_roots(params);
    const auto prof = curvature_profile(params, roots, 32, 2);
    REQUIRE(prof.size() == 2u * 2u * 32u + 1u);
    CHECK(prof.front().kappa == roots.beta);
    CHECK(prof.front().kappa_prime == 0.0);
    // kappa returns to beta at each full period
    const auto& mid = prof[2 * 32];
    CHECK(mid.kappa == doctest::Approx(roots.beta).epsilon(1e-12));
    CHECK_THROWS_AS(curvature_profile(params, roots, 4, 1), std::domain_error);
}
