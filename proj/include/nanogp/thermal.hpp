// thermal.hpp: Planck occupation and the two-temperature effective occupation

#pragma once

#include "nanogp/ldos.hpp"
#include "nanogp/system.hpp"

namespace nanogp::thermal {

struct Occupation {
    double value{0.0};
    bool underflow{false};  // ħω/k_BT > 700, value reported as 0
};

// 1/(exp(ħω/k_BT) - 1); exactly 0 at T = 0. DomainError for ω <= 0 or T < 0.
Occupation bose_einstein_checked(double omega, double T);
double bose_einstein(double omega, double T);

// n(T0) + (ρ_m/ρ)(n(T1) - n(T0)). DataError unless ρ > 0 and 0 <= ρ_m <= ρ.
double n_effective(const ldos::LdosResult& rho, double omega, const ThermalState& state);

} // namespace nanogp::thermal
