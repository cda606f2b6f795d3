#include "octapack/inversive.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace octapack {

double inv_dist_plane(const PlanarCircle& c1, const PlanarCircle& c2) {
    const double dd = std::norm(c1.center - c2.center);
    return (dd - c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * c1.radius * c2.radius);
}

double inv_dist_sphere(const SphericalCircle& s1, const SphericalCircle& s2) {
    const double ang = angle_between(s1.center, s2.center);
    return (-std::cos(ang) + std::cos(s1.radius) * std::cos(s2.radius)) /
           (std::sin(s1.radius) * std::sin(s2.radius));
}

PairClassification classify_pair(double d) {
    PairClassification out{};
    if (std::abs(d) <= kInputTol) {
        out.kind = PairKind::orthogonal;
        out.theta = std::numbers::pi_v<double> / 2.0;
        return out;
    }
    if (std::abs(d - 1.0) <= kInputTol) {
        out.kind = PairKind::externally_tangent;
        return out;
    }
    if (std::abs(d + 1.0) <= kInputTol) {
        out.kind = PairKind::internally_tangent;
        return out;
    }
    if (d > 1.0) {
        out.kind = PairKind::separated;
        out.delta = std::acosh(d);
    } else if (d < -1.0) {
        out.kind = PairKind::contained;
        out.delta = std::acosh(-d);
    } else {
        out.kind = PairKind::overlapping;
        out.theta = std::acos(d);
    }
    return out;
}

MobiusMap MobiusMap::normalized() const {
    const double m = std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    if (m == 0.0) return *this;
    return {a / m, b / m, c / m, d / m, conjugate_first};
}

MobiusMap MobiusMap::inverse() const {
    if (!conjugate_first) return MobiusMap{d, -b, -c, a}.normalized();
    // (M o conj)^-1 = conj o M^-1 = conj(M^-1) o conj
    return MobiusMap{std::conj(d), std::conj(-b), std::conj(-c), std::conj(a), true}.normalized();
}

Complex MobiusMap::operator()(Complex z) const {
    if (conjugate_first) z = std::conj(z);
    return (a * z + b) / (c * z + d);
}

std::optional<Complex> MobiusMap::pole() const {
    if (std::abs(c) == 0.0) return std::nullopt;
    const Complex p = -d / c;
    return conjugate_first ? std::conj(p) : p;
}

MobiusMap MobiusMap::inversion(const PlanarCircle& o) {
    // z -> z0 + r^2/conj(z - z0), written as a conjugated fractional map.
    const Complex z0 = o.center;
    const double r2 = o.radius * o.radius;
    return MobiusMap{z0, r2 - std::norm(z0), 1, -std::conj(z0), true}.normalized();
}

MobiusMap compose(const MobiusMap& m2, const MobiusMap& m1) {
    // m2(m1(z)): if m2 conjugates, the matrix part of m1 passes through
    // entrywise-conjugated.
    Complex a1 = m1.a, b1 = m1.b, c1 = m1.c, d1 = m1.d;
    if (m2.conjugate_first) {
        a1 = std::conj(a1);
        b1 = std::conj(b1);
        c1 = std::conj(c1);
        d1 = std::conj(d1);
    }
    MobiusMap out{m2.a * a1 + m2.b * c1, m2.a * b1 + m2.b * d1,
                  m2.c * a1 + m2.d * c1, m2.c * b1 + m2.d * d1,
                  m2.conjugate_first != m1.conjugate_first};
    return out.normalized();
}

PlanarCircle apply_mobius(const MobiusMap& m, const PlanarCircle& c) {
    Complex z0 = c.center;
    if (m.conjugate_first) z0 = std::conj(z0);
    const double r = c.radius;

    if (std::abs(m.c) == 0.0) {
        const Complex s = m.a / m.d;
        return {m.a / m.d * z0 + m.b / m.d, std::abs(s) * r};
    }
    const Complex p = -m.d / m.c; // pole of the even part
    const double pd = std::abs(z0 - p);
    if (std::abs(pd - r) < kInputTol)
        throw LineImage("circle passes through the pole of the Mobius map");

    // The inverse point of the pole maps to the center of the image circle.
    const Complex w = z0 + r * r / std::conj(p - z0);
    const Complex center = (m.a * w + m.b) / (m.c * w + m.d);
    const double denom = std::abs(std::norm(m.c * z0 + m.d) - std::norm(m.c) * r * r);
    const double radius = std::abs(m.det()) * r / denom;
    return {center, radius};
}

PlanarCircle invert_in_circle(const PlanarCircle& o, const PlanarCircle& c) {
    return apply_mobius(MobiusMap::inversion(o), c);
}

SphericalCircle stereographic_lift(const PlanarCircle& c) {
    // The planar circle |z - z0| = r is the zero set of
    // |z|^2 - 2 Re(conj(z0) z) + m with m = |z0|^2 - r^2; on the sphere this
    // becomes the plane 2 x0 X + 2 y0 Y + (m - 1) Z = 1 + m. The companion
    // cap of a bounded disk never contains the north pole, which makes the
    // center direction below the right one unconditionally.
    const double m = std::norm(c.center) - c.radius * c.radius;
    const Vec3 n{2.0 * c.center.real(), 2.0 * c.center.imag(), m - 1.0};
    const double L = norm(n);
    const double h = std::clamp((1.0 + m) / L, -1.0, 1.0);
    return {normalized(n), std::acos(h)};
}

PlanarCircle stereographic_drop(const SphericalCircle& s) {
    const double h = std::cos(s.radius);
    if (std::abs(s.center.z - h) < kInputTol)
        throw NorthPoleCircle("spherical circle passes through the north pole");
    const double lambda = 2.0 / (h - s.center.z);
    const Complex z0{lambda * s.center.x / 2.0, lambda * s.center.y / 2.0};
    const double m = 1.0 + lambda * s.center.z;
    const double r2 = std::norm(z0) - m;
    return {z0, std::sqrt(r2)};
}

} // namespace octapack
