#pragma once

#include <cmath>
#include <complex>

namespace octapack {

using Complex = std::complex<double>;

inline constexpr double kInputTol = 1e-12;

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) {
    double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}
inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

// Angle between two unit directions, clamped against round-off.
inline double angle_between(const Vec3& a, const Vec3& b) {
    double c = dot(a, b);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

// Circle in the complex plane. The companion disk is always the bounded disk.
struct PlanarCircle {
    Complex center;
    double radius = 0;
};

// Circle on the unit 2-sphere, stored as the center direction and spherical
// radius of its companion cap (the cap of radius < pi about `center`).
struct SphericalCircle {
    Vec3 center;      // unit vector
    double radius = 0; // in (0, pi)
};

} // namespace octapack
