#include "gromet/hyperbolic.hpp"

#include <cmath>

namespace gromet::hyp {

double minkowski(const Vec3& u, const Vec3& v) {
    return u.x * v.x + u.y * v.y - u.z * v.z;
}

Vec3 normalize_point(const Vec3& v) {
    const double q = -minkowski(v, v);
    const double s = 1.0 / std::sqrt(q);
    return Vec3{v.x * s, v.y * s, v.z * s};
}

double distance(const Vec3& u, const Vec3& v) {
    const double c = -minkowski(u, v);
    return std::acosh(c < 1.0 ? 1.0 : c);
}

Vec3 midpoint(const Vec3& u, const Vec3& v) {
    return normalize_point(Vec3{u.x + v.x, u.y + v.y, u.z + v.z});
}

Mat3 identity() {
    return Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) {
                s += a[i][k] * b[k][j];
            }
            r[i][j] = s;
        }
    }
    return r;
}

Vec3 apply(const Mat3& m, const Vec3& v) {
    return Vec3{m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Mat3 translation_x(double t) {
    const double c = std::cosh(t);
    const double s = std::sinh(t);
    return Mat3{{{c, 0, s}, {0, 1, 0}, {s, 0, c}}};
}

Mat3 rotation(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return Mat3{{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}};
}

Vec2 to_klein(const Vec3& v) {
    return Vec2{v.x / v.z, v.y / v.z};
}

} // namespace gromet::hyp
