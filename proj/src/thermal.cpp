// thermal.cpp: Planck occupation and the two-temperature effective occupation

#include "nanogp/thermal.hpp"

#include <cmath>

#include "nanogp/constants.hpp"
#include "nanogp/errors.hpp"

namespace nanogp::thermal {

Occupation bose_einstein_checked(double omega, double T) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("bose_einstein: omega must be finite and > 0");
    }
    if (!(T >= 0.0) || !std::isfinite(T)) {
        throw DomainError("bose_einstein: temperature must be finite and >= 0");
    }
    if (T == 0.0) {
        return {0.0, false};
    }
    const double x = constants::hbar * omega / (constants::k_B * T);
    if (x > 700.0) {
        return {0.0, true};
    }
    return {1.0 / std::expm1(x), false};
}

double bose_einstein(double omega, double T) {
    return bose_einstein_checked(omega, T).value;
}

double n_effective(const ldos::LdosResult& rho, double omega, const ThermalState& state) {
    if (!(rho.rho > 0.0) || !std::isfinite(rho.rho)) {
        throw DataError("n_effective: rho must be finite and > 0");
    }
    if (!(rho.rho_m >= 0.0 && rho.rho_m <= rho.rho)) {
        throw DataError("n_effective: need 0 <= rho_m <= rho");
    }
    const double n0 = bose_einstein(omega, state.T0);
    const double n1 = bose_einstein(omega, state.T1);
    return n0 + (rho.rho_m / rho.rho) * (n1 - n0);
}

} // namespace nanogp::thermal
