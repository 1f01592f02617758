// qdynamics.hpp: Transition rates and reduced density-matrix evolution of the atom
//
// Level |1> is the ground state, |2> the excited state. Initial state
// cos(θ0/2)|2> + sin(θ0/2)|1>.

#pragma once

#include <complex>
#include <optional>

#include "nanogp/ldos.hpp"
#include "nanogp/mie_green.hpp"
#include "nanogp/system.hpp"

namespace nanogp::qdynamics {

struct RateSet {
    double gamma_down{0.0};   // Γ(ω0), rad/s
    double gamma_up{0.0};     // Γ(-ω0)
    double gamma_plus{0.0};   // Γ(ω0) + Γ(-ω0)
    double gamma_minus{0.0};  // Γ(ω0) - Γ(-ω0)
    double Q{1.0};            // Γ-/Γ+ = 1/(1 + 2 n_eff)
    double n_eff{0.0};
    double Gamma0{0.0};
};

// Γ(ω0) = Γ0 (ρ/ρ0)(1 + n_eff), Γ(-ω0) = Γ0 (ρ/ρ0) n_eff.
RateSet transition_rates(const ldos::LdosResult& rho, double n_eff, double Gamma0);

struct AtomState {
    double rho11{0.0};
    double rho22{0.0};
    std::complex<double> rho12;
    double t{0.0};
};

// Closed-form solution; ρ12 rotates as e^{iΩt}.
AtomState density_matrix(double t, double theta0, const RateSet& rates, double Omega);

// Fixed-step RK4 of the population and coherence equations with rotation ω0 + Λ.
// Step h = min(1e-3/Γ+, 1e-2/|ω0 + Λ|). DomainError when t needs more than max_steps.
AtomState density_matrix_ode_oracle(double t, double theta0, const RateSet& rates, double omega0,
                                    double Lambda, long max_steps = 200'000'000);

struct EigenPath {
    double eps_plus{1.0};
    double eps_minus{0.0};
    double theta_t{0.0};  // in [0, π]
};

// ε± of the state and the polar angle of |ψ+> = e^{iΩt}cos(θt/2)|1> + sin(θt/2)|2>.
// When ε+ - ε- < 1e-12 θt is taken from `previous_theta`; without one, DomainError.
EigenPath eigen_path(const AtomState& state, double theta0, const RateSet& rates,
                     std::optional<double> previous_theta = std::nullopt);

// -(3π c Γ0 / ω0) Re Gs_rr(r_a, r_a, ω0), with Γ0 = s.atom.gamma0.
double lamb_shift_scattering(const SphereSystem& s, double omega0,
                             const mie::SeriesControl& ctl = {});

} // namespace nanogp::qdynamics
