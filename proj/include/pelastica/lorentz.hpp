#pragma once

#include <array>
#include <cmath>
#include <utility>

namespace pelastica {

// Vector of Lorentz-Minkowski 3-space, metric dx^2 + dy^2 - dz^2.
struct Vec3L {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3L operator+(const Vec3L& a, const Vec3L& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3L operator-(const Vec3L& a, const Vec3L& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3L operator*(double s, const Vec3L& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend Vec3L operator*(const Vec3L& v, double s) { return s * v; }
    friend Vec3L operator/(const Vec3L& v, double s) { return {v.x / s, v.y / s, v.z / s}; }
    Vec3L& operator+=(const Vec3L& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

// Which quadric of L^3 we work on.
//   epsilon = 0 : hyperbolic plane H^2,   <v,v> = -1, z > 0, curvature -1
//   epsilon = 1 : de Sitter 2-space H^2_1, <v,v> = +1,        curvature +1
// Space-like curves only, so eps1 = +1 always and eps2 = (-1)^epsilon.
struct SpaceForm {
    int epsilon = 0;

    static constexpr SpaceForm hyperbolic() { return {0}; }
    static constexpr SpaceForm de_sitter() { return {1}; }

    constexpr double eps1() const { return 1.0; }
    constexpr double eps2() const { return epsilon == 0 ? 1.0 : -1.0; }
    constexpr double rho() const { return epsilon == 0 ? -1.0 : 1.0; }
    constexpr bool operator==(const SpaceForm&) const = default;
};

enum class CrossVariant { euclidean, lorentzian };

double minkowski_inner(const Vec3L& u, const Vec3L& v);

// Euclidean: the usual R^3 cross product. Lorentzian: its metric dual under
// diag(1,1,-1), i.e. <u x v, w> = det(u,v,w); only the z component differs.
Vec3L cross(const Vec3L& u, const Vec3L& v, CrossVariant variant);

// Membership test |<v,v> + eps2| <= tol, plus the upper-sheet condition z > 0
// when epsilon = 0.
bool on_quadric(const Vec3L& v, SpaceForm space, double tol);

// (x, y) / (1 + z): H^2 -> open unit disk (Poincare model).
// Throws std::domain_error if v is not on H^2.
std::pair<double, double> poincare_project(const Vec3L& v);

// (x, y) / (x^2 + y^2): bottom half of H^2_1 -> once-punctured closed unit
// disk; the z = 0 boundary circle maps to itself. Throws on z > 0.
std::pair<double, double> punctured_project(const Vec3L& v);

}  // namespace pelastica
