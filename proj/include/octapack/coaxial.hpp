#pragma once

#include "octapack/inversive.hpp"

namespace octapack {

// Pencil type of the coaxial family through two circles, together with the
// Mobius flow it carries.
enum class PencilKind {
    intersecting, // two common points +-yi on the radical axis; hyperbolic flow
    tangent,      // one common point (the origin in normalized position); parabolic flow
    disjoint,     // limit points +-y on the line of centers; elliptic flow
};

struct CoaxialFamily {
    PencilKind kind;
    double y = 0; // common-point height (intersecting), 0 (tangent), limit point (disjoint)
    PlanarCircle g1, g2;
};

// Classify the pencil through two distinct circles. For the normalized
// construction both generators are centered on the real axis with the
// radical axis on the imaginary axis; general positions classify only.
// Throws IdenticalCircles.
CoaxialFamily build_family(const PlanarCircle& cu, const PlanarCircle& cv);

// The two pencil members A1 (through x1) and A2 (through x2) that envelope
// the flowed circles. Requires 1 < x1 < x2. Centers f_s and radii r_s obey
// f = r = x/2 (tangent), f^2 + y^2 = r^2 (intersecting), f^2 - r^2 = y^2
// (disjoint), with x = f + r in every case.
struct EnvelopePair {
    PlanarCircle a1, a2;
    double f1 = 0, r1 = 0, f2 = 0, r2 = 0;
    double x1 = 0, x2 = 0;
};

EnvelopePair envelope(const CoaxialFamily& fam, double x1, double x2);

// Conjugating map to the standard flow coordinates:
//   tangent:       T(z) = 1/z                         (self-inverse)
//   intersecting:  T(z) = k (z + yi)/(z - yi),  k = (x - yi)/(x + yi)
//   disjoint:      T(z) = k (z - y)/(z + y),    k = (x + y)/(x - y)
// `x_anchor` is the real point sent to 1: x2 for the intersecting case and
// x1 for the disjoint case (ignored for tangent pencils).
MobiusMap conjugator(const CoaxialFamily& fam, double x_anchor);

// Unit-speed flow data. `orientation` flips t so that the flow is
// counterclockwise on C_v, i.e. the flowed circle's center has positive
// imaginary part for small t > 0.
struct FlowSpec {
    CoaxialFamily family;
    EnvelopePair env;
    MobiusMap T, T_inv;
    double theta = 0;  // intersecting only: angle of the image of A1
    Complex t_x2{1, 0}; // disjoint only: T(x2)
    int orientation = 1;
};

FlowSpec make_flow(const CoaxialFamily& fam, const EnvelopePair& env);

// mu_t(c) = T^-1(nu_t(T(c))) with nu_t the standard translation, scaling or
// rotation flow. mu_0 = identity and mu_s . mu_t = mu_{s+t}.
PlanarCircle flow_circle(const FlowSpec& spec, const PlanarCircle& c, double t);

// Tangency points with the envelope plus the flowed circle's center and
// radius in closed form.
struct FlowedCircleState {
    double t = 0;
    Complex a1, a2; // tangency with A1 (external) and A2 (internal)
    Complex z;
    double r = 0;
};

// Throws NumericBreakdown when the radius denominator magnitude is < 1e-13.
FlowedCircleState flowed_state(const FlowSpec& spec, double t);

// Inversive distance between C(z,r) and its image under the rotation by
// 2*pi/3 about i/sqrt(3):  h(z,r) = |sqrt(3) z - i|^2 / (2 r^2) - 1.
double rotated_inv_dist(Complex z, double r);

// The rotation by 2*pi/3 about i/sqrt(3) (incenter of the base triangle).
Complex rotate_incenter(Complex z);
PlanarCircle rotate_incenter(const PlanarCircle& c);

} // namespace octapack
