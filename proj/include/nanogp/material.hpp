// material.hpp: Drude-Lorentz permittivity and the surface phonon-polariton resonance

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace nanogp::material {

struct PermittivityModel {
    double eps_inf{1.0};  // high-frequency permittivity
    double omega_l{0.0};  // longitudinal phonon frequency, rad/s
    double omega_r{0.0};  // transverse phonon frequency, rad/s
    double gamma_e{0.0};  // damping, rad/s
};

// Throws DomainError unless eps_inf > 0, omega_l > omega_r > 0, gamma_e >= 0.
void validate(const PermittivityModel& model);

// eps_inf (ω² - ω_l² + iγω) / (ω² - ω_r² + iγω). DomainError for ω <= 0.
std::complex<double> permittivity(const PermittivityModel& model, double omega);

PermittivityModel gaas_model();

// Root of Re ε(ω) = -2 in [ω_r(1 + 1e-6), ω_l], located to 1e-10 relative.
// Throws ResonanceNotFound when Re ε + 2 does not change sign on the bracket.
double lspp_resonance(const PermittivityModel& model);

// Named models usable from configuration files. Lookup is case-insensitive.
PermittivityModel named_model(const std::string& name);  // DomainError if unknown
std::vector<std::string> model_names();

} // namespace nanogp::material
