#pragma once

#include <cstddef>
#include <vector>

#include "octapack/construction.hpp"

namespace octapack {

// d(t) sampled on the n-point inclusive grid over [t0, t1]. Every sample is
// independent, so the parallel kernel is deterministic and bitwise-identical
// to the serial reference kept for testing.
std::vector<double> sweep_profile_serial(const CaseParams& p, double t0, double t1, std::size_t n);
std::vector<double> sweep_profile(const CaseParams& p, double t0, double t1, std::size_t n);

} // namespace octapack
