// specfun.hpp: Spherical Bessel/Hankel families of complex argument and Legendre polynomials

#pragma once

#include <complex>
#include <vector>

namespace nanogp::specfun {

using Complex = std::complex<double>;

// value = mantissa * exp(exponent). Multipole series near the sphere surface need
// orders where j_n underflows and h_n overflows long before their products do.
struct Scaled {
    Complex mantissa{0.0, 0.0};
    double exponent{0.0};

    Complex value() const;
    double log_abs() const;  // ln|value|, -inf for an exact zero
};

Scaled operator*(const Scaled& a, const Scaled& b);
Scaled operator/(const Scaled& a, const Scaled& b);

// Orders 0..n_max of one family at one argument. riccati[n] is the mantissa of
// ∂f_n(z) = (1/z) d(z f_n)/dz on the same exponent as value[n].
struct BesselFamily {
    Complex z;
    std::vector<Complex> value;
    std::vector<Complex> riccati;
    std::vector<double> exponent;

    int n_max() const { return static_cast<int>(value.size()) - 1; }
    Scaled at(int n) const { return {value[n], exponent[n]}; }
    Scaled riccati_at(int n) const { return {riccati[n], exponent[n]}; }
};

// j_n(z) by Miller's downward recurrence (continued-fraction ratios anchored on j_0 or j_1).
// Requires z != 0.
BesselFamily sph_bessel_j_family(int n_max, Complex z);

// h_n^(1)(z) by upward recurrence from the closed forms of h_0, h_1. Requires z != 0.
BesselFamily sph_hankel1_family(int n_max, Complex z);

// Largest order accepted by the family builders.
inline constexpr int max_order = 100000;

// Plain-valued evaluations. Throw RangeError when |f| lies outside [1e-280, 1e280]
// (exact zeros are returned as such).
Complex sph_bessel_j(int n, Complex z);    // z = 0 handled as the limit
Complex sph_hankel1(int n, Complex z);     // DomainError at z = 0
Complex riccati_deriv_j(int n, Complex z); // ∂j_n(z) = j_{n-1}(z) - n j_n(z)/z
Complex riccati_deriv_h(int n, Complex z);

// Legendre polynomials P_n(x), |x| <= 1, and dP_n(cos θ)/dθ for θ in [0, π].
double legendre_p(int n, double x);
double legendre_dp_dtheta(int n, double theta);

struct LegendreTable {
    std::vector<double> p;          // P_n(cos θ)
    std::vector<double> dp_dtheta;  // dP_n(cos θ)/dθ
};

LegendreTable legendre_table(int n_max, double theta);

} // namespace nanogp::specfun
