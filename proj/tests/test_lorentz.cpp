#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "pelastica/lorentz.hpp"

using namespace pelastica;

namespace {

Vec3L random_vec(std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    return {d(rng), d(rng), d(rng)};
}

// inverse of the Poincare projection: disk point back to the hyperboloid
Vec3L poincare_embed(double X, double Y) {
    const double r2 = X * X + Y * Y;
    return {2.0 * X / (1.0 - r2), 2.0 * Y / (1.0 - r2), (1.0 + r2) / (1.0 - r2)};
}

}  // namespace

TEST_CASE("minkowski inner product on axis vectors") {
    CHECK(minkowski_inner({0, 0, 1}, {0, 0, 1}) == doctest::Approx(-1.0));
    CHECK(minkowski_inner({1, 0, 0}, {1, 0, 0}) == doctest::Approx(1.0));
    const double s2 = std::sqrt(2.0);
    CHECK(minkowski_inner({1, 0, s2}, {1, 0, s2}) == doctest::Approx(-1.0));
}

TEST_CASE("inner product is symmetric") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const Vec3L u = random_vec(rng), v = random_vec(rng);
        CHECK(minkowski_inner(u, v) == minkowski_inner(v, u));
    }
}

TEST_CASE("cross product basis cases") {
    const Vec3L e = cross({1, 0, 0}, {0, 1, 0}, CrossVariant::euclidean);
    CHECK(e.x == 0.0);
    CHECK(e.y == 0.0);
    CHECK(e.z == 1.0);
    const Vec3L l = cross({1, 0, 0}, {0, 1, 0}, CrossVariant::lorentzian);
    CHECK(l.z == -1.0);

    std::mt19937 rng(11);
    const Vec3L u = random_vec(rng);
    const Vec3L uu = cross(u, u, CrossVariant::euclidean);
    CHECK(uu.x == 0.0);
    CHECK(uu.y == 0.0);
    CHECK(uu.z == 0.0);
}

TEST_CASE("cross product orthogonality in the matching metric") {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        const Vec3L u = random_vec(rng), v = random_vec(rng);
        const Vec3L cl = cross(u, v, CrossVariant::lorentzian);
        CHECK(std::abs(minkowski_inner(cl, u)) < 1e-12);
        CHECK(std::abs(minkowski_inner(cl, v)) < 1e-12);
        const Vec3L ce = cross(u, v, CrossVariant::euclidean);
        CHECK(std::abs(ce.x * u.x + ce.y * u.y + ce.z * u.z) < 1e-12);
        CHECK(std::abs(ce.x * v.x + ce.y * v.y + ce.z * v.z) < 1e-12);
    }
}

TEST_CASE("quadric membership") {
    CHECK(on_quadric({0, 0, 1}, SpaceForm::hyperbolic(), 1e-12));
    CHECK(on_quadric({1, 0, 0}, SpaceForm::de_sitter(), 1e-12));
    CHECK_FALSE(on_quadric({0, 0, -1}, SpaceForm::hyperbolic(), 1e-12));
}

TEST_CASE("poincare projection values") {
    auto [x0, y0] = poincare_project({0, 0, 1});
    CHECK(x0 == 0.0);
    CHECK(y0 == 0.0);
    auto [x1, y1] = poincare_project({1, 0, std::sqrt(2.0)});
    CHECK(x1 == doctest::Approx(1.0 / (1.0 + std::sqrt(2.0))).epsilon(1e-12));
    CHECK(y1 == 0.0);
    auto [x2, y2] = poincare_project({0, 2, std::sqrt(5.0)});
    CHECK(x2 == 0.0);
    CHECK(y2 == doctest::Approx(2.0 / (1.0 + std::sqrt(5.0))).epsilon(1e-12));
    const Vec3L below{0, 0, -1};
    CHECK_THROWS_AS(poincare_project(below), std::domain_error);
}

TEST_CASE("poincare projection inverts the disk embedding") {
    for (double X = -0.9; X <= 0.9; X += 0.15) {
        for (double Y = -0.9; Y <= 0.9; Y += 0.15) {
            if (X * X + Y * Y >= 0.95) continue;
            const Vec3L v = poincare_embed(X, Y);
            REQUIRE(on_quadric(v, SpaceForm::hyperbolic(), 1e-9));
            auto [px, py] = poincare_project(v);
            CHECK(std::abs(px - X) < 1e-12);
            CHECK(std::abs(py - Y) < 1e-12);
        }
    }
}

TEST_CASE("punctured projection values") {
    auto [x0, y0] = punctured_project({1, 0, 0});
    CHECK(x0 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(y0 == 0.0);
    auto [x1, y1] = punctured_project({2, 0, -std::sqrt(3.0)});
    CHECK(x1 == doctest::Approx(0.5).epsilon(1e-14));
    auto [x2, y2] = punctured_project({0, 3, -std::sqrt(8.0)});
    CHECK(x2 == 0.0);
    CHECK(y2 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    const Vec3L above{2, 0, std::sqrt(3.0)};
    CHECK_THROWS_AS(punctured_project(above), std::domain_error);
}

TEST_CASE("punctured projection maps parallels to centered circles") {
    for (double h = 0.25; h < 4.0; h *= 1.7) {
        const double r = std::sqrt(1.0 + h * h);
        for (double phi = 0.1; phi < 6.2; phi += 0.9) {
            const Vec3L v{r * std::cos(phi), r * std::sin(phi), -h};
            REQUIRE(on_quadric(v, SpaceForm::de_sitter(), 1e-12));
            auto [X, Y] = punctured_project(v);
            CHECK(std::hypot(X, Y) == doctest::Approx(1.0 / std::sqrt(1.0 + h * h)).epsilon(1e-12));
        }
    }
}
