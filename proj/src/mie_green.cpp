// mie_green.cpp: Mie coefficients and Green-tensor multipole series

#include "nanogp/mie_green.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nanogp/constants.hpp"
#include "nanogp/errors.hpp"
#include "series.hpp"

namespace nanogp::mie {

namespace {

using specfun::Scaled;
constexpr Complex I{0.0, 1.0};
constexpr double four_pi = 4.0 * std::numbers::pi;

void check_omega(double omega, const char* who) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError(std::string(who) + ": omega must be finite and > 0");
    }
}

void check_sphere(double a, double r_a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw GeometryError("sphere radius must be finite and > 0");
    }
    if (!(r_a > a) || !std::isfinite(r_a)) {
        throw GeometryError("atom distance r_a must exceed the sphere radius");
    }
}

Complex wavenumber_inside(Complex eps, double k0) {
    return std::sqrt(eps) * k0;
}

double nn(int n) {
    return static_cast<double>(n) * (n + 1.0);
}

// R, T on their natural exponents for orders 1..n_max.
struct Coefficients {
    std::vector<Scaled> R;
    std::vector<Scaled> T;
};

Coefficients coefficients(Complex eps, double a, double k0, int n_max) {
    const Complex k1 = wavenumber_inside(eps, k0);
    const Complex x0{k0 * a, 0.0};
    const Complex x1 = k1 * a;
    const auto j0 = specfun::sph_bessel_j_family(n_max, x0);
    const auto j1 = specfun::sph_bessel_j_family(n_max, x1);
    const auto h0 = specfun::sph_hankel1_family(n_max, x0);
    Coefficients c;
    c.R.resize(n_max + 1);
    c.T.resize(n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        const Complex den = k1 * j1.value[n] * h0.riccati[n] - k0 * j1.riccati[n] * h0.value[n];
        const Complex num = k1 * j1.value[n] * j0.riccati[n] - k0 * j1.riccati[n] * j0.value[n];
        c.R[n] = {num / den, j0.exponent[n] - h0.exponent[n]};
        // numerator of T reduces to k1 i/(k1 a)^2 through the Wronskian
        c.T[n] = {I / (k1 * a * a * den), -(j1.exponent[n] + h0.exponent[n])};
    }
    return c;
}

} // namespace

MieCoefficients mie_coefficients(Complex eps, double a, double omega, int n) {
    check_omega(omega, "mie_coefficients");
    if (!(a > 0.0)) {
        throw GeometryError("mie_coefficients: radius must be > 0");
    }
    if (n < 1) {
        throw DomainError("mie_coefficients: order must be >= 1");
    }
    const auto c = coefficients(eps, a, omega / constants::c, n);
    MieCoefficients m;
    m.n = n;
    m.R = c.R[n].value();
    m.T = c.T[n].value();
    m.B00 = -m.R;
    m.A01 = m.T;
    return m;
}

MieCoefficients mie_coefficients(const material::PermittivityModel& model, double a, double omega,
                                 int n) {
    return mie_coefficients(material::permittivity(model, omega), a, omega, n);
}

int choose_nmax(double x, int hard_cap) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("choose_nmax: size parameter must be finite and > 0");
    }
    const double n = std::ceil(x + 4.0 * std::cbrt(x) + 2.0) + 8.0;
    return static_cast<int>(std::clamp(n, 1.0, static_cast<double>(std::max(hard_cap, 1))));
}

Multipoles multipoles(Complex eps, double a, double r_a, double omega, int n_max) {
    check_omega(omega, "multipoles");
    check_sphere(a, r_a);
    const double k0 = omega / constants::c;
    auto c = coefficients(eps, a, k0, n_max);
    const double y = k0 * r_a;
    const auto hy = specfun::sph_hankel1_family(n_max, Complex{y, 0.0});

    Multipoles m;
    m.k0 = k0;
    m.k1 = wavenumber_inside(eps, k0);
    m.eps = eps;
    m.y = y;
    m.B.resize(n_max + 1);
    m.h_over_y.resize(n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        m.B[n] = {-c.R[n].mantissa, c.R[n].exponent};
        m.h_over_y[n] = {hy.value[n] / y, hy.exponent[n]};
    }
    m.A = std::move(c.T);
    return m;
}

Multipoles multipoles(const SphereSystem& s, double omega, int n_max) {
    return multipoles(material::permittivity(s.material, omega), s.radius, s.atom_distance, omega,
                      n_max);
}

SeriesResult green_direct_rr_series(double r_a, double omega, const SeriesControl& ctl) {
    check_omega(omega, "green_direct_rr");
    if (!(r_a > 0.0)) {
        throw GeometryError("green_direct_rr: r_a must be > 0");
    }
    const double k0 = omega / constants::c;
    const double x = k0 * r_a;
    const Complex pre = I * k0 / four_pi;
    const auto build = [&](int total) {
        const auto j = specfun::sph_bessel_j_family(total, Complex{x, 0.0});
        const auto h = specfun::sph_hankel1_family(total, Complex{x, 0.0});
        std::vector<Complex> t(total + 1);
        for (int n = 1; n <= total; ++n) {
            // Re h_n from the upward recurrence is unstable for n >> x; use j_n itself
            const Scaled jj = j.at(n) * j.at(n);
            const Scaled jy = j.at(n) * Scaled{Complex{h.value[n].imag(), 0.0}, h.exponent[n]};
            const Complex jh{jj.value().real(), jy.value().real()};
            t[n] = pre * nn(n) * (2.0 * n + 1.0) * jh / (x * x);
        }
        return t;
    };
    const auto measure = [](Complex t) { return std::abs(t.imag()); };
    const auto reference = [](const std::vector<Complex>&, int, Complex v) {
        return std::abs(v.imag());
    };
    const int start = ctl.n_max > 0 ? ctl.n_max : choose_nmax(x, ctl.hard_cap);
    return detail::truncated_sum(start, ctl, build, measure, reference, "green_direct_rr");
}

Complex green_direct_rr(double r_a, double omega, const SeriesControl& ctl) {
    return green_direct_rr_series(r_a, omega, ctl).value;
}

SeriesResult green_scat_rr_00_series(Complex eps, double a, double r_a, double omega,
                                     const SeriesControl& ctl) {
    check_omega(omega, "green_scat_rr_00");
    check_sphere(a, r_a);
    const double k0 = omega / constants::c;
    const Complex pre = I * k0 / four_pi;
    const auto build = [&](int total) {
        const auto m = multipoles(eps, a, r_a, omega, total);
        std::vector<Complex> t(total + 1);
        for (int n = 1; n <= total; ++n) {
            const Scaled term = m.B[n] * m.h_over_y[n] * m.h_over_y[n];
            t[n] = pre * nn(n) * (2.0 * n + 1.0) * term.value();
        }
        return t;
    };
    const auto measure = [](Complex t) { return std::abs(t); };
    const auto reference = [](const std::vector<Complex>&, int, Complex v) { return std::abs(v); };
    const int start = ctl.n_max > 0 ? ctl.n_max : choose_nmax(k0 * r_a, ctl.hard_cap);
    return detail::truncated_sum(start, ctl, build, measure, reference, "green_scat_rr_00");
}

SeriesResult green_scat_rr_00_series(const SphereSystem& s, double omega,
                                     const SeriesControl& ctl) {
    validate_geometry(s);
    return green_scat_rr_00_series(material::permittivity(s.material, omega), s.radius,
                                   s.atom_distance, omega, ctl);
}

Complex green_scat_rr_00(const SphereSystem& s, double omega, const SeriesControl& ctl) {
    return green_scat_rr_00_series(s, omega, ctl).value;
}

Green01Radial green01_radial(Complex eps, double a, double r_a, double r_prime, double omega,
                             const SeriesControl& ctl) {
    check_omega(omega, "green_scat_01");
    check_sphere(a, r_a);
    if (!(r_prime > 0.0 && r_prime < a)) {
        throw GeometryError("green_scat_01: source point must satisfy 0 < r' < a");
    }
    const double k0 = omega / constants::c;
    const Complex k1 = wavenumber_inside(eps, k0);
    const Complex pre = I * k1 / four_pi;
    const Complex z = k1 * r_prime;

    Green01Radial out;
    const auto build = [&](int total) {
        const auto m = multipoles(eps, a, r_a, omega, total);
        const auto j = specfun::sph_bessel_j_family(total, z);
        out.rr.assign(total + 1, Complex{});
        out.rtheta.assign(total + 1, Complex{});
        std::vector<Complex> bound(total + 1);
        for (int n = 1; n <= total; ++n) {
            const Scaled ah = m.A[n] * m.h_over_y[n];
            out.rr[n] = pre * nn(n) * (2.0 * n + 1.0) * (ah * Scaled{j.value[n] / z, j.exponent[n]}).value();
            out.rtheta[n] = pre * (2.0 * n + 1.0) * (ah * j.riccati_at(n)).value();
            bound[n] = std::abs(out.rr[n]) + n * std::abs(out.rtheta[n]);
        }
        return bound;
    };
    const auto measure = [](Complex b) { return b.real(); };
    const auto reference = [](const std::vector<Complex>& b, int n, Complex) {
        double s = 0.0;
        for (int k = 1; k <= n; ++k) {
            s += b[k].real();
        }
        return s;
    };
    const int start = ctl.n_max > 0 ? ctl.n_max : choose_nmax(k0 * r_a, ctl.hard_cap);
    const auto r = detail::truncated_sum(start, ctl, build, measure, reference, "green_scat_01");
    out.rr.resize(r.terms + 1);
    out.rtheta.resize(r.terms + 1);
    out.tail = r.tail;
    return out;
}

Green01Radial green01_radial(const SphereSystem& s, double r_prime, double omega,
                             const SeriesControl& ctl) {
    validate_geometry(s);
    return green01_radial(material::permittivity(s.material, omega), s.radius, s.atom_distance,
                          r_prime, omega, ctl);
}

Green01 evaluate_green01(const Green01Radial& radial, double theta_prime) {
    if (!(theta_prime >= 0.0 && theta_prime <= std::numbers::pi)) {
        throw GeometryError("green_scat_01: theta' outside [0, pi]");
    }
    const int n_max = static_cast<int>(radial.rr.size()) - 1;
    const auto leg = specfun::legendre_table(n_max, theta_prime);
    detail::KahanSum rr;
    detail::KahanSum rt;
    for (int n = 1; n <= n_max; ++n) {
        rr.add(radial.rr[n] * leg.p[n]);
        rt.add(radial.rtheta[n] * leg.dp_dtheta[n]);
    }
    return {rr.sum, rt.sum, Complex{}};
}

Green01 green_scat_01(const SphereSystem& s, double r_prime, double theta_prime, double omega,
                      const SeriesControl& ctl) {
    if (!(theta_prime >= 0.0 && theta_prime <= std::numbers::pi)) {
        throw GeometryError("green_scat_01: theta' outside [0, pi]");
    }
    return evaluate_green01(green01_radial(s, r_prime, omega, ctl), theta_prime);
}

} // namespace nanogp::mie
