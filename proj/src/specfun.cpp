// specfun.cpp: Spherical Bessel/Hankel recurrences and Legendre polynomials

#include "nanogp/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nanogp/errors.hpp"

namespace nanogp::specfun {

namespace {

constexpr double rescale_above = 1e100;
constexpr double rescale_below = 1e-100;
constexpr double range_log10 = 280.0;

void check_order(int n, const char* who) {
    if (n < 0 || n > max_order) {
        throw RangeError(std::string(who) + ": order " + std::to_string(n) + " outside [0, " +
                         std::to_string(max_order) + "]");
    }
}

// sin z and cos z as mantissas over a shared exponent; the exponent absorbs e^{|Im z|}
// once it would overflow a double.
struct ScaledTrig {
    Complex sin_m;
    Complex cos_m;
    double exponent;
};

ScaledTrig scaled_trig(Complex z) {
    const double y = z.imag();
    if (std::abs(y) < 300.0) {
        return {std::sin(z), std::cos(z), 0.0};
    }
    const Complex e_plus = std::polar(1.0, z.real());    // e^{ix}
    const Complex e_minus = std::polar(1.0, -z.real());  // e^{-ix}
    const Complex two_i{0.0, 2.0};
    if (y > 0.0) {
        // e^{iz} = e^{-y} e^{ix} is negligible against e^{-iz} = e^{y} e^{-ix}
        const double small = std::exp(-2.0 * y);
        return {(small * e_plus - e_minus) / two_i, (small * e_plus + e_minus) / 2.0, y};
    }
    const double small = std::exp(2.0 * y);
    return {(e_plus - small * e_minus) / two_i, (e_plus + small * e_minus) / 2.0, -y};
}

Complex checked_value(const Scaled& s, const char* who) {
    if (s.mantissa == Complex{}) {
        return {};
    }
    const double l10 = s.log_abs() / std::numbers::ln10;
    if (!(std::abs(l10) <= range_log10)) {
        throw RangeError(std::string(who) + ": |value| ~ 1e" + std::to_string(static_cast<long>(l10)) +
                         " outside the supported dynamic range");
    }
    return s.value();
}

} // namespace

Complex Scaled::value() const {
    const double m = std::abs(mantissa);
    if (m == 0.0) {
        return {};
    }
    return (mantissa / m) * std::exp(std::log(m) + exponent);
}

double Scaled::log_abs() const {
    const double m = std::abs(mantissa);
    if (m == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return std::log(m) + exponent;
}

Scaled operator*(const Scaled& a, const Scaled& b) {
    return {a.mantissa * b.mantissa, a.exponent + b.exponent};
}

Scaled operator/(const Scaled& a, const Scaled& b) {
    return {a.mantissa / b.mantissa, a.exponent - b.exponent};
}

BesselFamily sph_bessel_j_family(int n_max, Complex z) {
    check_order(n_max, "sph_bessel_j");
    if (z == Complex{}) {
        throw DomainError("sph_bessel_j_family: z = 0");
    }
    const double az = std::abs(z);

    BesselFamily fam;
    fam.z = z;
    fam.value.assign(n_max + 1, Complex{});
    fam.riccati.assign(n_max + 1, Complex{});
    fam.exponent.assign(n_max + 1, 0.0);

    // ratio[k] = j_k / j_{k-1} from the backward continued fraction
    std::vector<Complex> ratio(n_max + 1);
    const int start = std::max(n_max, static_cast<int>(std::ceil(az))) + 30 +
                      static_cast<int>(std::ceil(4.0 * std::cbrt(az)));
    Complex r{};
    for (int k = start; k >= 1; --k) {
        Complex den = static_cast<double>(2 * k + 1) - z * r;
        if (den == Complex{}) {
            den = std::numeric_limits<double>::min();
        }
        r = z / den;
        if (k <= n_max) {
            ratio[k] = r;
        }
    }

    const ScaledTrig trig = scaled_trig(z);
    fam.value[0] = trig.sin_m / z;
    fam.riccati[0] = trig.cos_m / z;
    fam.exponent[0] = trig.exponent;
    if (n_max == 0) {
        return fam;
    }

    // Anchor on whichever of j_0, j_1 is larger; j_0 has no zeros inside |z| < 1.
    Complex m = fam.value[0];
    int first = 1;
    if (az >= 1.0) {
        const Complex j1 = (trig.sin_m / z - trig.cos_m) / z;
        if (std::abs(j1) > std::abs(fam.value[0])) {
            fam.value[1] = j1;
            fam.exponent[1] = trig.exponent;
            m = j1;
            first = 2;
        }
    }
    double e = trig.exponent;
    for (int n = first; n <= n_max; ++n) {
        m *= ratio[n];
        const double am = std::abs(m);
        if (am > rescale_above || (am < rescale_below && am > 0.0)) {
            e += std::log(am);
            m /= am;
        }
        fam.value[n] = m;
        fam.exponent[n] = e;
    }
    for (int n = 1; n <= n_max; ++n) {
        const Complex prev = fam.value[n - 1] * std::exp(fam.exponent[n - 1] - fam.exponent[n]);
        fam.riccati[n] = prev - static_cast<double>(n) * fam.value[n] / z;
    }
    return fam;
}

namespace {

// Stable while h_n^(1) does not shrink against h_n^(2), i.e. for Im z >= 0.
BesselFamily hankel1_upward(int n_max, Complex z) {
    BesselFamily fam;
    fam.z = z;
    fam.value.assign(n_max + 1, Complex{});
    fam.riccati.assign(n_max + 1, Complex{});
    fam.exponent.assign(n_max + 1, 0.0);

    const Complex i{0.0, 1.0};
    const Complex eix = std::polar(1.0, z.real());  // e^{iz} = e^{-Im z} e^{i Re z}
    double e = -z.imag();
    Complex prev = -i * eix / z;                 // h_0
    fam.value[0] = prev;
    fam.riccati[0] = eix / z;                    // h_{-1} = e^{iz}/z
    fam.exponent[0] = e;
    if (n_max == 0) {
        return fam;
    }
    Complex cur = -eix * (z + i) / (z * z);      // h_1
    fam.value[1] = cur;
    fam.riccati[1] = prev - cur / z;
    fam.exponent[1] = e;
    for (int n = 1; n < n_max; ++n) {
        const Complex next = static_cast<double>(2 * n + 1) / z * cur - prev;
        prev = cur;
        cur = next;
        const double ac = std::abs(cur);
        if (ac > rescale_above) {
            prev /= ac;
            cur /= ac;
            e += std::log(ac);
        }
        fam.value[n + 1] = cur;
        fam.riccati[n + 1] = prev - static_cast<double>(n + 1) * cur / z;
        fam.exponent[n + 1] = e;
    }
    return fam;
}

} // namespace

BesselFamily sph_hankel1_family(int n_max, Complex z) {
    check_order(n_max, "sph_hankel1");
    if (z == Complex{}) {
        throw DomainError("sph_hankel1: z = 0 is a singular point");
    }
    if (z.imag() >= 0.0) {
        return hankel1_upward(n_max, z);
    }
    // h^(1)(z) = 2 j(z) - h^(2)(z), with h^(2)(z) = conj h^(1)(conj z)
    const BesselFamily mirror = hankel1_upward(n_max, std::conj(z));
    const BesselFamily j = sph_bessel_j_family(n_max, z);
    BesselFamily fam;
    fam.z = z;
    fam.value.resize(n_max + 1);
    fam.riccati.resize(n_max + 1);
    fam.exponent.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double e = std::max(j.exponent[n], mirror.exponent[n]);
        const double wj = 2.0 * std::exp(j.exponent[n] - e);
        const double wh = std::exp(mirror.exponent[n] - e);
        fam.value[n] = wj * j.value[n] - wh * std::conj(mirror.value[n]);
        fam.riccati[n] = wj * j.riccati[n] - wh * std::conj(mirror.riccati[n]);
        fam.exponent[n] = e;
    }
    return fam;
}

Complex sph_bessel_j(int n, Complex z) {
    check_order(n, "sph_bessel_j");
    if (z == Complex{}) {
        return n == 0 ? Complex{1.0, 0.0} : Complex{};
    }
    return checked_value(sph_bessel_j_family(n, z).at(n), "sph_bessel_j");
}

Complex sph_hankel1(int n, Complex z) {
    return checked_value(sph_hankel1_family(n, z).at(n), "sph_hankel1");
}

Complex riccati_deriv_j(int n, Complex z) {
    if (z == Complex{}) {
        throw DomainError("riccati_deriv_j: z = 0");
    }
    return checked_value(sph_bessel_j_family(n, z).riccati_at(n), "riccati_deriv_j");
}

Complex riccati_deriv_h(int n, Complex z) {
    return checked_value(sph_hankel1_family(n, z).riccati_at(n), "riccati_deriv_h");
}

double legendre_p(int n, double x) {
    if (n < 0) {
        throw DomainError("legendre_p: negative order");
    }
    if (!(std::abs(x) <= 1.0)) {
        throw DomainError("legendre_p: |x| > 1");
    }
    double p_prev = 1.0;
    if (n == 0) {
        return p_prev;
    }
    double p = x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0);
        p_prev = p;
        p = next;
    }
    return p;
}

LegendreTable legendre_table(int n_max, double theta) {
    if (n_max < 0) {
        throw DomainError("legendre_table: negative order");
    }
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw DomainError("legendre_table: theta outside [0, pi]");
    }
    const double x = std::cos(theta);
    const double s = std::sin(theta);
    LegendreTable t;
    t.p.assign(n_max + 1, 0.0);
    t.dp_dtheta.assign(n_max + 1, 0.0);
    // P'_{n+1} = P'_{n-1} + (2n+1) P_n: a sum of like-signed terms near |x| = 1
    std::vector<double> dp(n_max + 2, 0.0);
    t.p[0] = 1.0;
    if (n_max >= 1) {
        t.p[1] = x;
        dp[1] = 1.0;
    }
    for (int k = 1; k < n_max; ++k) {
        t.p[k + 1] = ((2.0 * k + 1.0) * x * t.p[k] - k * t.p[k - 1]) / (k + 1.0);
        dp[k + 1] = dp[k - 1] + (2.0 * k + 1.0) * t.p[k];
    }
    for (int k = 0; k <= n_max; ++k) {
        t.dp_dtheta[k] = -s * dp[k];
    }
    return t;
}

double legendre_dp_dtheta(int n, double theta) {
    return legendre_table(n, theta).dp_dtheta[n];
}

} // namespace nanogp::specfun
