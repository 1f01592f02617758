// test_util.hpp: Shared helpers for the unit tests

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace testutil {

inline double rel_diff(std::complex<double> a, std::complex<double> b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline double rel_diff(double a, double b) {
    return rel_diff(std::complex<double>{a, 0.0}, std::complex<double>{b, 0.0});
}

} // namespace testutil
