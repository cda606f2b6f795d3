#include "octapack/sweep.hpp"

#include <cstdint>

namespace octapack {

namespace {

inline double grid_point(double t0, double t1, std::size_t n, std::size_t i) {
    return (n <= 1) ? t0 : t0 + (t1 - t0) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

} // namespace

std::vector<double> sweep_profile_serial(const CaseParams& p, double t0, double t1, std::size_t n) {
    std::vector<double> out(n);
    bool broke = false;
    for (std::size_t i = 0; i < n; ++i) {
        try {
            out[i] = profile_d(p, grid_point(t0, t1, n, i));
        } catch (const NumericBreakdown&) {
            broke = true;
        }
    }
    if (broke) throw NumericBreakdown("profile sweep hit a degenerate sample");
    return out;
}

std::vector<double> sweep_profile(const CaseParams& p, double t0, double t1, std::size_t n) {
    std::vector<double> out(n);
    bool broke = false;
    const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) reduction(|| : broke)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] =
                profile_d(p, grid_point(t0, t1, n, static_cast<std::size_t>(i)));
        } catch (const NumericBreakdown&) {
            broke = true;
        }
    }
    if (broke) throw NumericBreakdown("profile sweep hit a degenerate sample");
    return out;
}

} // namespace octapack
