// mie_green.hpp: Mie coefficients and radial-dipole components of the sphere's Green tensor

#pragma once

#include <complex>
#include <vector>

#include "nanogp/material.hpp"
#include "nanogp/specfun.hpp"
#include "nanogp/system.hpp"

namespace nanogp::mie {

using Complex = std::complex<double>;

struct MieCoefficients {
    int n{1};
    Complex R;    // exterior reflection
    Complex T;    // interior transmission
    Complex B00;  // = -R
    Complex A01;  // = T
};

// k0 = ω/c, k1 = sqrt(ε) ω/c on the principal branch.
MieCoefficients mie_coefficients(const material::PermittivityModel& model, double a, double omega,
                                 int n);
MieCoefficients mie_coefficients(Complex eps, double a, double omega, int n);

struct SeriesControl {
    int n_max{0};  // 0: choose_nmax, then grow until the tail test passes
    double rel_tol{1e-12};
    int hard_cap{8000};
};

// ceil(x + 4 x^(1/3) + 2) + 8, clamped to [1, hard_cap].
int choose_nmax(double x, int hard_cap = SeriesControl{}.hard_cap);

struct SeriesResult {
    Complex value;
    double tail{0.0};  // 10-term tail bound relative to |value|
    int terms{0};
};

// Free-space self term (ik0/4π) Σ n(n+1)(2n+1) h_n(x) j_n(x)/x², x = k0 r_a.
// Only the imaginary part converges; its tail decides truncation. The real part is the
// partial sum at the final order.
SeriesResult green_direct_rr_series(double r_a, double omega, const SeriesControl& ctl = {});
Complex green_direct_rr(double r_a, double omega, const SeriesControl& ctl = {});

// Scattered self term at r_a: (ik0/4π) Σ n(n+1)(2n+1) B_n (h_n(k0 r_a)/(k0 r_a))².
SeriesResult green_scat_rr_00_series(const SphereSystem& s, double omega,
                                     const SeriesControl& ctl = {});
SeriesResult green_scat_rr_00_series(Complex eps, double a, double r_a, double omega,
                                     const SeriesControl& ctl = {});
Complex green_scat_rr_00(const SphereSystem& s, double omega, const SeriesControl& ctl = {});

struct Green01 {
    Complex rr;
    Complex rtheta;
    Complex rphi;  // identically zero for a radial dipole on the polar axis
};

// Field at the atom (r_a on the polar axis) from a point r' = (r', θ') inside the sphere.
// Requires 0 < r' < a < r_a and θ' in [0, π].
Green01 green_scat_01(const SphereSystem& s, double r_prime, double theta_prime, double omega,
                      const SeriesControl& ctl = {});

// Per-order data at one (material, a, r_a, ω), kept in scaled form.
struct Multipoles {
    double k0{0.0};
    Complex k1;
    Complex eps;
    double y{0.0};                        // k0 r_a
    std::vector<specfun::Scaled> B;       // index n, entry 0 unused
    std::vector<specfun::Scaled> A;
    std::vector<specfun::Scaled> h_over_y;  // h_n(y)/y
    int n_max() const { return static_cast<int>(B.size()) - 1; }
};

Multipoles multipoles(const SphereSystem& s, double omega, int n_max);
Multipoles multipoles(Complex eps, double a, double r_a, double omega, int n_max);

// Radial coefficients of G^(01) at fixed r'. At angle θ':
//   G_rr = Σ rr[n] P_n(cos θ'),  G_rθ = Σ rtheta[n] dP_n/dθ'.
// Truncated where the bound Σ |rr| + n |rtheta| passes the tail test.
struct Green01Radial {
    std::vector<Complex> rr;
    std::vector<Complex> rtheta;
    double tail{0.0};
};

Green01Radial green01_radial(const SphereSystem& s, double r_prime, double omega,
                             const SeriesControl& ctl = {});
Green01Radial green01_radial(Complex eps, double a, double r_a, double r_prime, double omega,
                             const SeriesControl& ctl = {});
Green01 evaluate_green01(const Green01Radial& radial, double theta_prime);

} // namespace nanogp::mie
