#pragma once

#include <optional>

#include "octapack/errors.hpp"
#include "octapack/geometry.hpp"

namespace octapack {

// Inversive distance between two planar circles:
//   (|p1 - p2|^2 - r1^2 - r2^2) / (2 r1 r2).
// Symmetric, and invariant in absolute value under Mobius transformations.
double inv_dist_plane(const PlanarCircle& c1, const PlanarCircle& c2);

// Inversive distance between two spherical circles:
//   (-cos(angle(p1, p2)) + cos r1 cos r2) / (sin r1 sin r2).
double inv_dist_sphere(const SphericalCircle& s1, const SphericalCircle& s2);

enum class PairKind {
    separated,          // d > 1
    externally_tangent, // d = 1
    overlapping,        // |d| < 1, d != 0
    orthogonal,         // d = 0
    internally_tangent, // d = -1
    contained,          // d < -1
};

struct PairClassification {
    PairKind kind;
    std::optional<double> theta; // overlap angle in (0, pi), present iff |d| < 1
    std::optional<double> delta; // hyperbolic plane distance, present iff |d| > 1
};

PairClassification classify_pair(double d);

// Projective 2x2 complex matrix z -> (a z + b)/(c z + d). When
// conjugate_first is set the map acts on conj(z) instead, i.e. it is an
// odd (orientation-reversing) inversive transformation.
struct MobiusMap {
    Complex a{1}, b{0}, c{0}, d{1};
    bool conjugate_first = false;

    Complex det() const { return a * d - b * c; }
    // Scale entries so the largest magnitude is 1. Keeps compositions from
    // drifting toward overflow or underflow.
    MobiusMap normalized() const;
    MobiusMap inverse() const;
    Complex operator()(Complex z) const;
    // Preimage of infinity (conjugated when conjugate_first is set).
    std::optional<Complex> pole() const;

    static MobiusMap identity() { return {}; }
    static MobiusMap translation(Complex t) { return {1, t, 0, 1}; }
    static MobiusMap scaling(Complex s) { return {s, 0, 0, 1}; }
    // Inversion through the circle o, an involutive anti-Mobius map.
    static MobiusMap inversion(const PlanarCircle& o);
};

// m2 after m1 (i.e. z -> m2(m1(z))).
MobiusMap compose(const MobiusMap& m2, const MobiusMap& m1);

// Image of a circle under a Mobius map, with the bounded companion disk.
// Throws LineImage when c passes through the pole of m (within 1e-12).
PlanarCircle apply_mobius(const MobiusMap& m, const PlanarCircle& c);

// Inversion of c through o. Involutive; throws LineImage when c passes
// through the center of o.
PlanarCircle invert_in_circle(const PlanarCircle& o, const PlanarCircle& c);

// Stereographic projection from the north pole (0,0,1) onto the equatorial
// plane, (X,Y,Z) -> (X+iY)/(1-Z), and its inverse. The lift sends the
// bounded companion disk to the cap that misses the north pole. Both
// preserve |inversive distance|; the signed value is preserved whenever
// neither companion disk contains the north pole.
SphericalCircle stereographic_lift(const PlanarCircle& c);

// Throws NorthPoleCircle when s passes through (0,0,1) within 1e-12.
PlanarCircle stereographic_drop(const SphericalCircle& s);

} // namespace octapack
