#pragma once

#include <array>
#include <optional>

#include "octapack/coaxial.hpp"

namespace octapack {

// Vertex indices shared with the octahedron combinatorics: the base face
// u, v, w and the flowed face u', v', w'.
enum Vertex : int { VU = 0, VV = 1, VW = 2, VUp = 3, VVp = 4, VWp = 5 };

// Three circles of radius sqrt(2/(a+1)) centered at -1, 1, i*sqrt(3), with
// pairwise inversive distance exactly a.
std::array<PlanarCircle, 3> base_triple(double a);

// Everything fixed by the choice of (a, x1, x2): the base triple, the pencil
// through C_u and C_v, the envelope members through x1 and x2, the unit-speed
// flow, the initial circle C, and its labels b = <C_u, C>, c = <C_v, C>.
struct CaseParams {
    double a = 0, x1 = 0, x2 = 0;
    double base_radius = 0;
    PlanarCircle cu, cv, cw, initial;
    CoaxialFamily family;
    EnvelopePair env;
    FlowSpec flow;
    double b = 0, c = 0;
};

// Throws OutOfRange unless 1 < x1 < x2, NegativeC when c < 0.
CaseParams make_params(double a, double x1, double x2);

// Build from the pencil parameter instead: y > 0 with the kind choosing
// a = (1 - y^2)/(1 + y^2) (intersecting) or a = (1 + y^2)/(1 - y^2) (disjoint).
CaseParams make_params_from_y(PencilKind kind, double y, double x1, double x2);

// The initial circle through x1 and x2 on the positive real axis and its
// edge labels (b, c). Part of make_params; exposed for direct use.
struct InitialCircle {
    PlanarCircle circle;
    double b = 0, c = 0;
};
InitialCircle initial_circle(double a, double x1, double x2);

// The six circles of the configuration at flow time t: the fixed base triple
// and the rotated copies of the flowed circle. Indexed by Vertex.
struct Configuration {
    std::array<PlanarCircle, 6> circles;
    double t = 0;
};
Configuration make_configuration(const CaseParams& p, double t);

// d(t): the inversive distance between the flowed circle and its rotation,
// via the closed-form center/radius. Agrees with the direct configuration
// distance within 1e-9.
double profile_d(const CaseParams& p, double t);

// Extremum structure of one branch (tangent/intersecting pencils) or one
// period (disjoint): the first global minimizer tau, the local maximizer m
// between the two minima, the second minimizer tau', and for the periodic
// case the absolute maximizer M and period omega = 2*pi.
struct ExtremaReport {
    double tau = 0, d_tau = 0;
    double m = 0, d_m = 0;
    double tau_prime = 0;
    std::optional<double> M, d_M, omega;
};

// Dense grid scan followed by golden-section/parabolic refinement; extrema
// are verified by a central-difference derivative check. Throws
// NoInteriorMinimum when the profile is monotone on the bracket.
ExtremaReport find_extrema(const CaseParams& p);

// Same, on an explicit bracket (the default brackets are [-10, 10] for
// tangent/intersecting pencils and [0, 2*pi] for disjoint ones).
ExtremaReport find_extrema_on_bracket(const CaseParams& p, double lo, double hi);

// The two flow times t < tau < t' with d(t) = d(t') = d_target, found by
// bisection on the monotone branches adjacent to tau. Throws OutOfBand
// unless d(tau) < d_target < d(m).
std::pair<double, double> find_pair(const CaseParams& p, double d_target);

// The circle orthogonal to all three base circles, centered at i/sqrt(3)
// with radius sqrt(4/3 - 2/(a+1)). Throws NoOrthogonalCircle when a <= 1/2.
PlanarCircle orthogonal_circle(double a);

// Strict interior of the half-plane containing z = 1 and bordered by the
// line through -1 and i/sqrt(3), via the signed-area predicate.
bool in_half_plane_interior(Complex z);

struct CriticalityReport {
    bool in_half_plane = false;
    std::optional<PlanarCircle> o_circle;
    std::optional<double> inv_dist_to_o;
    bool passes = false;
};

// Checks the two criticality conditions at the minimizer tau. Propagates
// NoOrthogonalCircle when a <= 1/2.
CriticalityReport criticality_check(const CaseParams& p, double tau);

// The angle subtended at the incenter by the flowed circle:
// alpha = arcsin(r(t)/|z(t) - i/sqrt(3)|), with the identity
// d(t) = 1/2 + (3/2) cot^2(alpha). Throws CenterInsideCircle when the
// flowed circle contains the incenter.
double alpha_angle(Complex z, double r);
double alpha_angle(const CaseParams& p, double t);

// The flow time t' with mu_{t'}(C) = I_O(mu_t(C)), recovered by inverting
// the flowed circle through O and reading the flow parameter off its
// tangency point with A2. Fixed point is the local maximizer m.
double involution_partner(const CaseParams& p, double t);

} // namespace octapack
