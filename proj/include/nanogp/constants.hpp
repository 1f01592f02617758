// constants.hpp: CODATA SI constants

#pragma once

#include <numbers>

namespace nanogp::constants {

inline constexpr double c = 299792458.0;            // m/s
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double k_B = 1.380649e-23;         // J/K
inline constexpr double pi = std::numbers::pi;

} // namespace nanogp::constants
