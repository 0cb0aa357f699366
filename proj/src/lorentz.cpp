#include "pelastica/lorentz.hpp"

#include <stdexcept>

namespace pelastica {

double minkowski_inner(const Vec3L& u, const Vec3L& v) {
    return u.x * v.x + u.y * v.y - u.z * v.z;
}

Vec3L cross(const Vec3L& u, const Vec3L& v, CrossVariant variant) {
    Vec3L c{u.y * v.z - u.z * v.y,
            u.z * v.x - u.x * v.z,
            u.x * v.y - u.y * v.x};
    if (variant == CrossVariant::lorentzian) c.z = -c.z;
    return c;
}

bool on_quadric(const Vec3L& v, SpaceForm space, double tol) {
    const double target = -space.eps2();  // -1 on H^2, +1 on H^2_1
    if (std::abs(minkowski_inner(v, v) - target) > tol) return false;
    if (space.epsilon == 0 && !(v.z > 0.0)) return false;
    return true;
}

std::pair<double, double> poincare_project(const Vec3L& v) {
    if (!on_quadric(v, SpaceForm::hyperbolic(), 1e-9)) {
        throw std::domain_error("poincare_project: point is not on H^2");
    }
    const double s = 1.0 + v.z;
    return {v.x / s, v.y / s};
}

std::pair<double, double> punctured_project(const Vec3L& v) {
    if (v.z > 0.0) {
        throw std::domain_error("punctured_project: point is not on the bottom half of H^2_1");
    }
    const double r2 = v.x * v.x + v.y * v.y;
    if (r2 <= 0.0) {
        throw std::domain_error("punctured_project: axis points are not on H^2_1");
    }
    return {v.x / r2, v.y / r2};
}

}  // namespace pelastica
