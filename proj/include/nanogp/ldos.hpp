// ldos.hpp: Partial local density of states of a radial dipole near the sphere

#pragma once

#include <complex>
#include <vector>

#include "nanogp/mie_green.hpp"
#include "nanogp/quadrature.hpp"
#include "nanogp/system.hpp"

namespace nanogp::ldos {

// Densities in s/m^3.
struct LdosResult {
    double rho{0.0};
    double rho_m{0.0};  // absorbed inside the sphere
    double rho_v{0.0};  // rho - rho_m
    double rho_normalized{0.0};  // rho / rho_vacuum
    double omega{0.0};
    double r_a{0.0};
};

// ω² / (π² c³)
double rho_vacuum(double omega);

// ρ0 (1 + 3/2 Re Σ n(n+1)(2n+1) B_n (h_n(y)/y)²), y = k0 r_a.
double pldos_series(const SphereSystem& s, double omega, const mie::SeriesControl& ctl = {});

// 6ω/(π c²) Im(G0_rr + Gs_rr).
double pldos_green(const SphereSystem& s, double omega, const mie::SeriesControl& ctl = {});

// Series value, after checking it against the Green-tensor form. A mismatch beyond
// 1e-8 relative raises ConvergenceError.
double pldos(const SphereSystem& s, double omega, const mie::SeriesControl& ctl = {});

// Per-order radial integrals over the sphere interior at one ω, each divided by
// |j_n(k1 a)|²:
//   i1[n] = ∫_0^a r'² |j_n(k1 r')/(k1 r')|² dr',   i2[n] = ∫_0^a r'² |∂j_n(k1 r')|² dr'.
// They do not depend on r_a, so sweeps over distance can share them.
struct RadialIntegrals {
    std::complex<double> eps;
    double a{0.0};
    double omega{0.0};
    std::vector<double> i1;
    std::vector<double> i2;
    int n_max() const { return static_cast<int>(i1.size()) - 1; }
    bool covers(std::complex<double> e, double radius, double w, int n) const {
        return e == eps && radius == a && w == omega && n <= n_max();
    }
};

RadialIntegrals radial_integrals(std::complex<double> eps, double a, double omega, int n_max,
                                 const specfun::QuadratureSpec& quad = {});

// 3|ε|ω⁵/(2π²c⁶) Im ε (C1 + C2). When `cache` is given it is reused if it covers the
// requested orders and refilled otherwise.
double medium_pldos(const SphereSystem& s, double omega, const mie::SeriesControl& ctl = {},
                    const specfun::QuadratureSpec& quad = {}, RadialIntegrals* cache = nullptr);

// (6ω³/πc⁴) Im ε ∫ dV (|G_rr^(01)|² + |G_rθ^(01)|²) by nested quadrature over r', θ'
// and, with explicit_azimuth, φ'.
double medium_pldos_direct(const SphereSystem& s, double omega, const mie::SeriesControl& ctl = {},
                           const specfun::QuadratureSpec& quad = {.rel_tol = 1e-9},
                           bool explicit_azimuth = false);

LdosResult evaluate(const SphereSystem& s, double omega, const mie::SeriesControl& ctl = {},
                    const specfun::QuadratureSpec& quad = {}, RadialIntegrals* cache = nullptr);

} // namespace nanogp::ldos
