// gp.hpp: Geometric phase of the dissipative two-level atom

#pragma once

#include "nanogp/ldos.hpp"
#include "nanogp/qdynamics.hpp"
#include "nanogp/quadrature.hpp"

namespace nanogp::gp {

// -π(1 - cos θ0)
double gp_unitary(double theta0);

// GP over one quasicyclic period T = 2π/Ω by adaptive quadrature in s = Ωt.
double gp_exact(double theta0, const qdynamics::RateSet& rates, double Omega,
                const specfun::QuadratureSpec& quad = {});

// -Ω ∫_0^t cos²(θ_t'/2) dt'
double dynamical_phase(double theta0, const qdynamics::RateSet& rates, double Omega, double t,
                       const specfun::QuadratureSpec& quad = {});

// arg <ψ+(0)|ψ+(t)>, principal value in (-π, π].
double pancharatnam_phase(double theta0, const qdynamics::RateSet& rates, double Omega, double t);

struct OracleResult {
    double phase{0.0};         // Richardson-extrapolated total
    double pancharatnam{0.0};  // arg <ψ+(0)|ψ+(t)> from the eigenvectors
    double difference{0.0};    // |Φ(2N) - Φ(N)| before extrapolation
};

// Discrete parallel transport of the eigensolver's ψ+ over [0, periods·2π/Ω] with N and
// 2N steps. ConvergenceError for steps < 16 or when the two resolutions differ by more
// than 1e-4.
OracleResult gp_kinematic_oracle(double theta0, const qdynamics::RateSet& rates, double Omega,
                                 int steps, double periods = 1.0);

// Φ0 - (π²Γ0/2ρ0ω0) ρ sin²θ0 [cos θ0 + 2 n_eff cos θ0 + 2]
double gp_approx(double theta0, const ldos::LdosResult& rho, double n_eff, double Gamma0,
                 double omega0);

// (π²Γ0/2ρ0ω0) ρ sin²θ0 (cos θ0 + 2)
double delta_phi_medium(double theta0, const ldos::LdosResult& rho, double Gamma0, double omega0);

// (π²Γ0/ρ0ω0) ρ n_eff sin²θ0 cos θ0
double delta_phi_noneq(double theta0, const ldos::LdosResult& rho, double n_eff, double Gamma0,
                       double omega0);

// (π²Γ0/2ρ0ω0) ρ sin²θ0 [cos θ0 + 2 n_eff cos θ0 + 2]; negative when
// (1 + 2 n_eff) cos θ0 < -2.
double delta_phi_total(double theta0, const ldos::LdosResult& rho, double n_eff, double Gamma0,
                       double omega0);

struct GpResult {
    double phi_exact{0.0};
    double phi_approx{0.0};
    double phi0{0.0};
    double dphi_m{0.0};
    double dphi_outeq{0.0};
    double dphi_total{0.0};    // |phi_approx - phi0|
    double pancharatnam{0.0};  // at T = 2π/Ω
};

GpResult evaluate(double theta0, const ldos::LdosResult& rho, double n_eff, double Gamma0,
                  double omega0, double Omega, const specfun::QuadratureSpec& quad = {});

} // namespace nanogp::gp
