// ldos.cpp: PLDOS series, medium PLDOS and its direct volume-integral form

#include "nanogp/ldos.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nanogp/constants.hpp"
#include "nanogp/errors.hpp"
#include "series.hpp"

namespace nanogp::ldos {

namespace {

using Complex = std::complex<double>;
using constants::c;
constexpr double pi = std::numbers::pi;

void check_omega(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("ldos: omega must be finite and > 0");
    }
}

} // namespace

double rho_vacuum(double omega) {
    check_omega(omega);
    return omega * omega / (pi * pi * c * c * c);
}

double pldos_series(const SphereSystem& s, double omega, const mie::SeriesControl& ctl) {
    const auto gs = mie::green_scat_rr_00_series(s, omega, ctl);
    const double k0 = omega / c;
    // gs = (i k0 / 4π) Σ ...
    const Complex sum = gs.value / Complex{0.0, k0 / (4.0 * pi)};
    return rho_vacuum(omega) * (1.0 + 1.5 * sum.real());
}

double pldos_green(const SphereSystem& s, double omega, const mie::SeriesControl& ctl) {
    const Complex g0 = mie::green_direct_rr(s.atom_distance, omega, ctl);
    const Complex gs = mie::green_scat_rr_00(s, omega, ctl);
    return 6.0 * omega / (pi * c * c) * (g0 + gs).imag();
}

double pldos(const SphereSystem& s, double omega, const mie::SeriesControl& ctl) {
    const double series = pldos_series(s, omega, ctl);
    const double green = pldos_green(s, omega, ctl);
    if (!(std::abs(series - green) <= 1e-8 * std::abs(series))) {
        throw ConvergenceError("pldos: series and Green-tensor forms disagree", series,
                               std::abs(series - green));
    }
    return series;
}

RadialIntegrals radial_integrals(Complex eps, double a, double omega, int n_max,
                                 const specfun::QuadratureSpec& quad) {
    check_omega(omega);
    if (!(a > 0.0)) {
        throw GeometryError("radial_integrals: radius must be > 0");
    }
    if (n_max < 1) {
        throw DomainError("radial_integrals: n_max must be >= 1");
    }
    const Complex k1 = std::sqrt(eps) * omega / c;
    const double k1_abs2 = std::norm(k1);
    const auto surface = specfun::sph_bessel_j_family(n_max, k1 * a);

    const specfun::VectorIntegrand f = [&](double r, std::span<Complex> out) {
        const Complex z = k1 * r;
        const auto j = specfun::sph_bessel_j_family(n_max, z);
        for (int n = 1; n <= n_max; ++n) {
            const Complex v = (j.at(n) / surface.at(n)).value();
            const Complex dv = (j.riccati_at(n) / surface.at(n)).value();
            out[n - 1] = std::norm(v) / k1_abs2;
            out[n_max + n - 1] = r * r * std::norm(dv);
        }
    };
    std::vector<Complex> values;
    try {
        values = specfun::adaptive_quadrature(f, 2 * n_max, 0.0, a, quad).value;
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(std::string("medium_pldos radial integrals (n_max ") +
                                   std::to_string(n_max) + "): " + e.what(),
                               e.best_estimate, e.error_estimate);
    }
    RadialIntegrals out;
    out.eps = eps;
    out.a = a;
    out.omega = omega;
    out.i1.assign(n_max + 1, 0.0);
    out.i2.assign(n_max + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        out.i1[n] = values[n - 1].real();
        out.i2[n] = values[n_max + n - 1].real();
    }
    return out;
}

double medium_pldos(const SphereSystem& s, double omega, const mie::SeriesControl& ctl,
                    const specfun::QuadratureSpec& quad, RadialIntegrals* cache) {
    validate_geometry(s);
    const Complex eps = material::permittivity(s.material, omega);
    if (eps.imag() < 0.0) {
        throw DomainError("medium_pldos: Im eps < 0");
    }
    if (eps.imag() == 0.0) {
        return 0.0;
    }
    const double a = s.radius;
    RadialIntegrals local;
    RadialIntegrals& ri = cache ? *cache : local;

    const auto build = [&](int total) {
        if (!ri.covers(eps, a, omega, total)) {
            ri = radial_integrals(eps, a, omega, total, quad);
        }
        const auto m = mie::multipoles(eps, a, s.atom_distance, omega, total);
        const auto surface = specfun::sph_bessel_j_family(total, m.k1 * a);
        std::vector<Complex> t(total + 1);
        for (int n = 1; n <= total; ++n) {
            // |A j_n(k1 a)|² |h/y|²; the integrals carry |j_n(k1 r')/j_n(k1 a)|²
            const double log_w =
                2.0 * (m.A[n].log_abs() + surface.at(n).log_abs() + m.h_over_y[n].log_abs());
            const double nn = static_cast<double>(n) * (n + 1.0);
            const double radial = nn * nn * (2.0 * n + 1.0) * ri.i1[n] +
                                  nn * (2.0 * n + 1.0) * ri.i2[n];
            t[n] = radial > 0.0 ? std::exp(log_w + std::log(radial)) : 0.0;
        }
        return t;
    };
    const auto measure = [](Complex t) { return t.real(); };
    const auto reference = [](const std::vector<Complex>&, int, Complex v) { return v.real(); };
    const double k0 = omega / c;
    const int start = ctl.n_max > 0 ? ctl.n_max : mie::choose_nmax(k0 * s.atom_distance, ctl.hard_cap);
    const auto sum = mie::detail::truncated_sum(start, ctl, build, measure, reference, "medium_pldos");

    const double w = omega;
    const double pre = 3.0 * std::abs(eps) * std::pow(w, 5) / (2.0 * pi * pi * std::pow(c, 6));
    return pre * eps.imag() * sum.value.real();
}

double medium_pldos_direct(const SphereSystem& s, double omega, const mie::SeriesControl& ctl,
                           const specfun::QuadratureSpec& quad, bool explicit_azimuth) {
    validate_geometry(s);
    const Complex eps = material::permittivity(s.material, omega);
    if (eps.imag() < 0.0) {
        throw DomainError("medium_pldos_direct: Im eps < 0");
    }
    if (eps.imag() == 0.0) {
        return 0.0;
    }
    specfun::QuadratureSpec inner = quad;
    inner.rel_tol = std::max(quad.rel_tol * 1e-2, 1e-14);

    const auto shell = [&](double r) -> Complex {
        const auto radial = mie::green01_radial(s, r, omega, ctl);
        const auto angular = [&](double theta) -> Complex {
            const auto g = mie::evaluate_green01(radial, theta);
            const double density = std::norm(g.rr) + std::norm(g.rtheta) + std::norm(g.rphi);
            if (!explicit_azimuth) {
                return 2.0 * pi * density * std::sin(theta);
            }
            const auto azimuth = [&](double) -> Complex { return density * std::sin(theta); };
            return specfun::adaptive_quadrature(azimuth, 0.0, 2.0 * pi, inner).value;
        };
        return r * r * specfun::adaptive_quadrature(angular, 0.0, pi, inner).value;
    };
    const double volume = specfun::adaptive_quadrature(shell, 0.0, s.radius, quad).value.real();
    return 6.0 * std::pow(omega, 3) / (pi * std::pow(c, 4)) * eps.imag() * volume;
}

LdosResult evaluate(const SphereSystem& s, double omega, const mie::SeriesControl& ctl,
                    const specfun::QuadratureSpec& quad, RadialIntegrals* cache) {
    LdosResult r;
    r.omega = omega;
    r.r_a = s.atom_distance;
    r.rho = pldos(s, omega, ctl);
    r.rho_m = medium_pldos(s, omega, ctl, quad, cache);
    r.rho_v = r.rho - r.rho_m;
    r.rho_normalized = r.rho / rho_vacuum(omega);
    return r;
}

} // namespace nanogp::ldos
