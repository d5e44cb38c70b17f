#pragma once

#include <array>

namespace gromet::hyp {

/// Point or tangent vector on the hyperboloid model of the curvature -1
/// plane: {v : <v,v> = -1, v.z > 0} with <u,v> = ux vx + uy vy - uz vz.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

double minkowski(const Vec3& u, const Vec3& v);
Vec3 normalize_point(const Vec3& v);
double distance(const Vec3& u, const Vec3& v);
Vec3 midpoint(const Vec3& u, const Vec3& v);

Mat3 identity();
Mat3 mul(const Mat3& a, const Mat3& b);
Vec3 apply(const Mat3& m, const Vec3& v);
/// Translation by t along the x-axis geodesic through the origin.
Mat3 translation_x(double t);
/// Rotation by phi about the origin (0,0,1).
Mat3 rotation(double phi);

inline Vec3 origin() { return Vec3{0.0, 0.0, 1.0}; }

/// Klein-model projection (x/z, y/z); geodesics map to straight chords.
struct Vec2 {
    double x = 0.0, y = 0.0;
};
Vec2 to_klein(const Vec3& v);

} // namespace gromet::hyp
