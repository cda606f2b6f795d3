#include "octapack/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "octapack/optimize.hpp"
#include "octapack/sweep.hpp"

namespace octapack {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
const Complex kI{0.0, 1.0};
const Complex kIncenter = kI / std::sqrt(3.0);

} // namespace

std::array<PlanarCircle, 3> base_triple(double a) {
    if (a < 0) throw OutOfRange("base triple requires a >= 0");
    const double r = std::sqrt(2.0 / (a + 1.0));
    return {PlanarCircle{Complex{-1.0, 0.0}, r}, PlanarCircle{Complex{1.0, 0.0}, r},
            PlanarCircle{std::sqrt(3.0) * kI, r}};
}

InitialCircle initial_circle(double a, double x1, double x2) {
    if (!(1.0 < x1 && x1 < x2)) throw OutOfRange("initial circle requires 1 < x1 < x2");
    const auto base = base_triple(a);
    const PlanarCircle c{Complex{0.5 * (x1 + x2), 0.0}, 0.5 * (x2 - x1)};
    InitialCircle out{c, inv_dist_plane(base[VU], c), inv_dist_plane(base[VV], c)};
    if (out.c < 0) throw NegativeC("initial circle has c < 0");
    return out;
}

CaseParams make_params(double a, double x1, double x2) {
    CaseParams p;
    p.a = a;
    p.x1 = x1;
    p.x2 = x2;
    const auto base = base_triple(a);
    p.cu = base[VU];
    p.cv = base[VV];
    p.cw = base[VW];
    p.base_radius = p.cu.radius;
    const InitialCircle init = initial_circle(a, x1, x2);
    p.initial = init.circle;
    p.b = init.b;
    p.c = init.c;
    p.family = build_family(p.cu, p.cv);
    p.env = envelope(p.family, x1, x2);
    p.flow = make_flow(p.family, p.env);
    return p;
}

CaseParams make_params_from_y(PencilKind kind, double y, double x1, double x2) {
    double a = 0;
    switch (kind) {
    case PencilKind::intersecting:
        if (!(y > 0 && y <= 1)) throw BadKindParams("intersecting pencil requires 0 < y <= 1");
        a = (1.0 - y * y) / (1.0 + y * y);
        break;
    case PencilKind::disjoint:
        if (!(y > 0 && y < 1)) throw BadKindParams("disjoint pencil requires 0 < y < 1");
        a = (1.0 + y * y) / (1.0 - y * y);
        break;
    case PencilKind::tangent:
        if (y != 0) throw BadKindParams("tangent pencil has y = 0");
        a = 1.0;
        break;
    }
    return make_params(a, x1, x2);
}

Configuration make_configuration(const CaseParams& p, double t) {
    const FlowedCircleState st = flowed_state(p.flow, t);
    const PlanarCircle wp{st.z, st.r};
    Configuration cfg;
    cfg.t = t;
    cfg.circles[VU] = p.cu;
    cfg.circles[VV] = p.cv;
    cfg.circles[VW] = p.cw;
    cfg.circles[VWp] = wp;
    cfg.circles[VUp] = rotate_incenter(wp);
    cfg.circles[VVp] = rotate_incenter(cfg.circles[VUp]);
    return cfg;
}

double profile_d(const CaseParams& p, double t) {
    const FlowedCircleState st = flowed_state(p.flow, t);
    return rotated_inv_dist(st.z, st.r);
}

namespace {

struct Extremum {
    double t;
    double d;
    bool is_min;
};

// Refine a grid extremum with Brent on the neighbor bracket and verify the
// derivative vanishes there.
Extremum refine(const CaseParams& p, double ta, double tb, bool is_min) {
    auto f = [&](double t) { return is_min ? profile_d(p, t) : -profile_d(p, t); };
    const double t = brent_minimize(f, ta, tb, 1e-12);
    const double d = profile_d(p, t);
    const double h = 1e-5;
    const double deriv = (profile_d(p, t + h) - profile_d(p, t - h)) / (2.0 * h);
    if (std::abs(deriv) > 1e-6 * std::max(1.0, std::abs(d)))
        throw GeometryError("extremum refinement failed the derivative check");
    return {t, d, is_min};
}

ExtremaReport assemble_open(const CaseParams& p, const std::vector<Extremum>& ex) {
    // Open-line profile: d -> +inf at both bracket ends, so the structure is
    // min tau, max m, min tau'.
    std::vector<Extremum> mins, maxs;
    for (const auto& e : ex) (e.is_min ? mins : maxs).push_back(e);
    if (mins.empty()) throw NoInteriorMinimum("profile has no interior minimum on the bracket");
    ExtremaReport rep;
    if (mins.size() == 1) {
        // Degenerate width: both minima collapsed at grid resolution.
        rep.tau = rep.tau_prime = mins[0].t;
        rep.d_tau = mins[0].d;
        if (maxs.empty()) throw NoInteriorMinimum("profile has a single extremum on the bracket");
        rep.m = maxs[0].t;
        rep.d_m = maxs[0].d;
        return rep;
    }
    rep.tau = mins.front().t;
    rep.d_tau = mins.front().d;
    rep.tau_prime = mins.back().t;
    const Extremum* best = nullptr;
    for (const auto& e : maxs)
        if (e.t > rep.tau && e.t < rep.tau_prime && (!best || e.d > best->d)) best = &e;
    if (!best) throw NoInteriorMinimum("no interior maximum between the two minima");
    rep.m = best->t;
    rep.d_m = best->d;
    return rep;
}

ExtremaReport assemble_periodic(const std::vector<Extremum>& ex) {
    // One period of a disjoint-pencil profile carries exactly two minima (the
    // equal global minima) and two maxima (local m, absolute M).
    std::vector<Extremum> mins, maxs;
    for (const auto& e : ex) (e.is_min ? mins : maxs).push_back(e);
    if (mins.empty()) throw NoInteriorMinimum("periodic profile has no minimum");
    if (mins.size() != 2 || maxs.size() != 2)
        throw NoInteriorMinimum("periodic profile does not have the expected four extrema");

    const Extremum& small_max = maxs[0].d <= maxs[1].d ? maxs[0] : maxs[1];
    const Extremum& big_max = maxs[0].d <= maxs[1].d ? maxs[1] : maxs[0];
    // tau is the minimum followed (cyclically) by the smaller maximum.
    auto forward = [](double from, double to) { return std::fmod(to - from + 4.0 * kPi, 2.0 * kPi); };
    const Extremum& tau =
        forward(mins[0].t, small_max.t) < forward(mins[0].t, big_max.t) ? mins[0] : mins[1];
    const Extremum& tau_p = (&tau == &mins[0]) ? mins[1] : mins[0];

    ExtremaReport rep;
    rep.tau = tau.t;
    rep.d_tau = tau.d;
    rep.m = tau.t + forward(tau.t, small_max.t);
    rep.d_m = small_max.d;
    rep.tau_prime = tau.t + forward(tau.t, tau_p.t);
    rep.M = tau.t + forward(tau.t, big_max.t);
    rep.d_M = big_max.d;
    rep.omega = 2.0 * kPi;
    return rep;
}

} // namespace

ExtremaReport find_extrema_on_bracket(const CaseParams& p, double lo, double hi) {
    const bool periodic = p.family.kind == PencilKind::disjoint;
    const std::size_t n = 8192;
    std::vector<Extremum> found;

    if (periodic) {
        // Sample one period half-open and compare neighbors cyclically.
        std::vector<double> ds(n);
        const double step = (hi - lo) / static_cast<double>(n);
        {
            std::vector<double> grid = sweep_profile(p, lo, hi - step, n);
            ds = std::move(grid);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double prev = ds[(i + n - 1) % n], cur = ds[i], next = ds[(i + 1) % n];
            const double t = lo + step * static_cast<double>(i);
            if (cur < prev && cur < next) found.push_back(refine(p, t - step, t + step, true));
            if (cur > prev && cur > next) found.push_back(refine(p, t - step, t + step, false));
        }
        if (found.empty()) throw NoInteriorMinimum("profile is flat on the period");
        return assemble_periodic(found);
    }

    const std::vector<double> ds = sweep_profile(p, lo, hi, n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double t = lo + step * static_cast<double>(i);
        if (ds[i] < ds[i - 1] && ds[i] < ds[i + 1]) found.push_back(refine(p, t - step, t + step, true));
        if (ds[i] > ds[i - 1] && ds[i] > ds[i + 1]) found.push_back(refine(p, t - step, t + step, false));
    }
    if (found.empty()) throw NoInteriorMinimum("profile is monotone on the bracket");
    return assemble_open(p, found);
}

ExtremaReport find_extrema(const CaseParams& p) {
    if (p.family.kind == PencilKind::disjoint) return find_extrema_on_bracket(p, 0.0, 2.0 * kPi);
    return find_extrema_on_bracket(p, -10.0, 10.0);
}

std::pair<double, double> find_pair(const CaseParams& p, double d_target) {
    const ExtremaReport ex = find_extrema(p);
    if (!(ex.d_tau < d_target && d_target < ex.d_m))
        throw OutOfBand("d_target must lie strictly between d(tau) and d(m)");

    auto g = [&](double t) { return profile_d(p, t) - d_target; };
    const double ftol = 1e-11 * d_target;

    // Right branch: monotone increase from tau to m.
    const double t_right = bisect_root(g, ex.tau, ex.m, 0.0, ftol, 300);

    // Left branch: monotone decrease into tau. For the periodic case the
    // previous extremum is the absolute maximum one period back.
    double lo;
    if (p.family.kind == PencilKind::disjoint) {
        lo = *ex.M - 2.0 * kPi;
    } else {
        double step = std::max(ex.m - ex.tau, 0.1);
        lo = ex.tau - step;
        while (g(lo) < 0.0) {
            step *= 2.0;
            lo = ex.tau - step;
        }
    }
    const double t_left = bisect_root(g, lo, ex.tau, 0.0, ftol, 300);
    return {t_left, t_right};
}

PlanarCircle orthogonal_circle(double a) {
    if (!(a > 0.5)) throw NoOrthogonalCircle("the orthogonal circle exists only for a > 1/2");
    const double rho = std::sqrt(4.0 / 3.0 - 2.0 / (a + 1.0));
    return {kIncenter, rho};
}

bool in_half_plane_interior(Complex z) {
    // Signed area of (-1, z, i/sqrt(3)); positive on the side of z = 1.
    const Complex u = z + 1.0;
    const Complex v = kIncenter + 1.0;
    return u.real() * v.imag() - u.imag() * v.real() > 1e-12;
}

CriticalityReport criticality_check(const CaseParams& p, double tau) {
    CriticalityReport rep;
    const PlanarCircle o = orthogonal_circle(p.a);
    rep.o_circle = o;
    const FlowedCircleState st = flowed_state(p.flow, tau);
    rep.in_half_plane = in_half_plane_interior(st.z);
    rep.inv_dist_to_o = inv_dist_plane({st.z, st.r}, o);
    rep.passes = rep.in_half_plane && *rep.inv_dist_to_o > 0.0;
    return rep;
}

double alpha_angle(Complex z, double r) {
    const double s = r / std::abs(z - kIncenter);
    if (s > 1.0 + kInputTol)
        throw CenterInsideCircle("the incenter lies inside the flowed circle");
    return std::asin(std::min(s, 1.0));
}

double alpha_angle(const CaseParams& p, double t) {
    const FlowedCircleState st = flowed_state(p.flow, t);
    return alpha_angle(st.z, st.r);
}

double involution_partner(const CaseParams& p, double t) {
    const PlanarCircle o = orthogonal_circle(p.a);
    const FlowedCircleState st = flowed_state(p.flow, t);
    const PlanarCircle img = invert_in_circle(o, {st.z, st.r});

    // The image is again tangent to both envelope circles; its tangency point
    // with A2 carries the flow parameter.
    const auto& env = p.env;
    const Complex dir = (img.center - env.f2) / std::abs(img.center - env.f2);
    const Complex a2 = env.f2 + env.r2 * dir;

    double t_eff = 0;
    switch (p.family.kind) {
    case PencilKind::tangent:
        t_eff = -(1.0 / a2).imag();
        break;
    case PencilKind::intersecting:
        t_eff = std::log(std::abs(p.flow.T(a2)));
        break;
    case PencilKind::disjoint: {
        double arg = std::arg(p.flow.T(a2) / p.flow.t_x2);
        if (arg < 0) arg += 2.0 * kPi;
        t_eff = arg;
        break;
    }
    }
    double tp = p.flow.orientation * t_eff;
    if (p.family.kind == PencilKind::disjoint) {
        tp = std::fmod(tp + 4.0 * kPi, 2.0 * kPi);
    }
    return tp;
}

} // namespace octapack
