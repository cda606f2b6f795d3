#include "octapack/coaxial.hpp"

#include <cmath>
#include <numbers>

namespace octapack {

namespace {

constexpr double kPencilTol = 1e-10;
const Complex kI{0.0, 1.0};

// Radical axis position on the line of centers for two circles centered on
// the real axis.
double radical_axis_x(const PlanarCircle& c1, const PlanarCircle& c2) {
    const double p1 = c1.center.real(), p2 = c2.center.real();
    return 0.5 * (p1 + p2) + (c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * (p2 - p1));
}

} // namespace

CoaxialFamily build_family(const PlanarCircle& cu, const PlanarCircle& cv) {
    if (std::abs(cu.center - cv.center) < kInputTol && std::abs(cu.radius - cv.radius) < kInputTol)
        throw IdenticalCircles("coaxial family needs two distinct circles");
    if (std::abs(cu.center - cv.center) < kInputTol)
        throw BadKindParams("concentric generators are not supported");

    const double d = inv_dist_plane(cu, cv);
    CoaxialFamily fam{PencilKind::tangent, 0.0, cu, cv};
    if (std::abs(std::abs(d) - 1.0) <= kPencilTol) {
        fam.kind = PencilKind::tangent;
        fam.y = 0.0;
        return fam;
    }
    // Power of the radical-axis point with respect to either circle gives the
    // common-point height (intersecting) or the limit-point offset (disjoint).
    const double xr = radical_axis_x(cu, cv);
    const double pow1 = (xr - cu.center.real()) * (xr - cu.center.real()) - cu.radius * cu.radius;
    if (std::abs(d) < 1.0) {
        fam.kind = PencilKind::intersecting;
        fam.y = std::sqrt(-pow1);
    } else {
        fam.kind = PencilKind::disjoint;
        fam.y = std::sqrt(pow1);
    }
    return fam;
}

EnvelopePair envelope(const CoaxialFamily& fam, double x1, double x2) {
    if (!(1.0 < x1 && x1 < x2))
        throw OutOfRange("envelope requires 1 < x1 < x2");
    if (fam.kind == PencilKind::disjoint && x1 <= fam.y)
        throw OutOfRange("envelope requires x1 > y for a disjoint pencil");

    EnvelopePair env;
    env.x1 = x1;
    env.x2 = x2;
    const double y2 = fam.y * fam.y;
    auto member = [&](double x, double& f, double& r) {
        switch (fam.kind) {
        case PencilKind::tangent:
            f = r = 0.5 * x;
            break;
        case PencilKind::intersecting:
            f = (x * x - y2) / (2.0 * x);
            r = (x * x + y2) / (2.0 * x);
            break;
        case PencilKind::disjoint:
            f = (x * x + y2) / (2.0 * x);
            r = (x * x - y2) / (2.0 * x);
            break;
        }
    };
    member(x1, env.f1, env.r1);
    member(x2, env.f2, env.r2);
    env.a1 = {Complex{env.f1, 0.0}, env.r1};
    env.a2 = {Complex{env.f2, 0.0}, env.r2};
    return env;
}

MobiusMap conjugator(const CoaxialFamily& fam, double x_anchor) {
    switch (fam.kind) {
    case PencilKind::tangent:
        return MobiusMap{0, 1, 1, 0};
    case PencilKind::intersecting: {
        if (!(fam.y > 0) || !(x_anchor > 0))
            throw BadKindParams("intersecting conjugator needs y > 0 and x2 > 0");
        const Complex k = (x_anchor - fam.y * kI) / (x_anchor + fam.y * kI);
        return MobiusMap{k, k * fam.y * kI, 1, -fam.y * kI}.normalized();
    }
    case PencilKind::disjoint: {
        if (!(fam.y > 0) || !(x_anchor > fam.y))
            throw BadKindParams("disjoint conjugator needs y > 0 and x1 > y");
        const Complex k = (x_anchor + fam.y) / (x_anchor - fam.y);
        return MobiusMap{k, -k * fam.y, 1, fam.y}.normalized();
    }
    }
    throw BadKindParams("unknown pencil kind");
}

namespace {

MobiusMap standard_flow(PencilKind kind, double t) {
    switch (kind) {
    case PencilKind::tangent:
        return MobiusMap::translation(-t * kI);
    case PencilKind::intersecting:
        return MobiusMap::scaling(std::exp(t));
    case PencilKind::disjoint:
        return MobiusMap::scaling(std::exp(t * kI));
    }
    throw BadKindParams("unknown pencil kind");
}

FlowedCircleState state_impl(const FlowSpec& spec, double t_eff, double t_reported) {
    const auto& env = spec.env;
    Complex a1, a2;
    switch (spec.family.kind) {
    case PencilKind::tangent: {
        const double q1 = env.x1 * t_eff, q2 = env.x2 * t_eff;
        a1 = env.x1 * (1.0 + q1 * kI) / (1.0 + q1 * q1);
        a2 = env.x2 * (1.0 + q2 * kI) / (1.0 + q2 * q2);
        break;
    }
    case PencilKind::intersecting:
        a1 = spec.T_inv(std::exp(Complex{t_eff, spec.theta}));
        a2 = spec.T_inv(std::exp(Complex{t_eff, 0.0}));
        break;
    case PencilKind::disjoint:
        a1 = spec.T_inv(std::exp(t_eff * kI));
        a2 = spec.T_inv(std::exp(t_eff * kI) * spec.t_x2);
        break;
    }
    const Complex denom = env.r2 * (a1 - env.f1) + env.r1 * (a2 - env.f2);
    if (std::abs(denom) < 1e-13)
        throw NumericBreakdown("flowed-circle radius denominator collapsed");
    const Complex rc = env.r1 * env.r2 * (a2 - a1) / denom;
    const double r = rc.real();
    const Complex z = env.f1 + (env.r1 + r) * (a1 - env.f1) / env.r1;
    return {t_reported, a1, a2, z, r};
}

} // namespace

FlowSpec make_flow(const CoaxialFamily& fam, const EnvelopePair& env) {
    FlowSpec spec;
    spec.family = fam;
    spec.env = env;
    const double anchor = (fam.kind == PencilKind::disjoint) ? env.x1 : env.x2;
    spec.T = conjugator(fam, anchor);
    spec.T_inv = spec.T.inverse();
    if (fam.kind == PencilKind::intersecting) {
        spec.theta = std::acos((env.f1 * env.f2 + fam.y * fam.y) / (env.r1 * env.r2));
    } else if (fam.kind == PencilKind::disjoint) {
        spec.t_x2 = spec.T(Complex{env.x2, 0.0});
    }
    spec.orientation = 1;
    // Counterclockwise on C_v: the flowed center must move up for small t > 0.
    const FlowedCircleState probe = state_impl(spec, 1e-3, 1e-3);
    if (probe.z.imag() < 0.0) spec.orientation = -1;
    return spec;
}

PlanarCircle flow_circle(const FlowSpec& spec, const PlanarCircle& c, double t) {
    const MobiusMap nu = standard_flow(spec.family.kind, spec.orientation * t);
    const MobiusMap mu = compose(spec.T_inv, compose(nu, spec.T));
    return apply_mobius(mu, c);
}

FlowedCircleState flowed_state(const FlowSpec& spec, double t) {
    return state_impl(spec, spec.orientation * t, t);
}

double rotated_inv_dist(Complex z, double r) {
    const double n = std::norm(std::sqrt(3.0) * z - kI);
    return n / (2.0 * r * r) - 1.0;
}

Complex rotate_incenter(Complex z) {
    static const Complex incenter = kI / std::sqrt(3.0);
    static const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi_v<double> / 3.0);
    return incenter + omega * (z - incenter);
}

PlanarCircle rotate_incenter(const PlanarCircle& c) {
    return {rotate_incenter(c.center), c.radius};
}

} // namespace octapack
