#include <catch_amalgamated.hpp>

#include <cmath>

#include "nanogp/errors.hpp"
#include "nanogp/material.hpp"
#include "test_util.hpp"

using namespace nanogp::material;
using testutil::rel_diff;

namespace {

// Last upward crossing of Re ε = -2 on a uniform scan, refined by bisection.
double scan_root(const PermittivityModel& m, int points) {
    const auto f = [&](double w) { return permittivity(m, w).real() + 2.0; };
    const double lo = m.omega_r * (1.0 + 1e-6), hi = m.omega_l;
    double a = 0.0, b = 0.0;
    for (int k = points - 1; k >= 0; --k) {
        const double w0 = lo + (hi - lo) * k / points, w1 = lo + (hi - lo) * (k + 1) / points;
        if (f(w0) < 0.0 && f(w1) >= 0.0) {
            a = w0;
            b = w1;
            break;
        }
    }
    REQUIRE(b > 0.0);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        (f(mid) < 0.0 ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

} // namespace

TEST_CASE("GaAs parameters") {
    const auto m = gaas_model();
    CHECK(m.eps_inf == 11.0);
    CHECK(m.omega_l / m.omega_r == Catch::Approx(0.550 / 0.506).epsilon(1e-15));
    CHECK(permittivity(m, m.omega_r).imag() > 0.0);
}

TEST_CASE("permittivity limits") {
    const auto m = gaas_model();
    CHECK(rel_diff(permittivity(m, 1e6 * m.omega_r).real(), 11.0) < 1e-6);
    const double static_eps = 11.0 * (0.550 / 0.506) * (0.550 / 0.506);
    CHECK(rel_diff(permittivity(m, 1e-6 * m.omega_r).real(), static_eps) < 1e-9);
    CHECK(std::abs(permittivity(m, 1.074 * m.omega_r).real() + 2.0) < 0.05);
}

TEST_CASE("Im eps is non-negative over a wide grid") {
    const auto m = gaas_model();
    for (int k = 1; k <= 5000; ++k) {
        const double w = m.omega_r * 1e-3 * std::pow(1e7, k / 5000.0);
        CHECK(permittivity(m, w).imag() >= 0.0);
    }
}

TEST_CASE("model and argument validation") {
    CHECK_THROWS_AS(permittivity(gaas_model(), 0.0), nanogp::DomainError);
    CHECK_THROWS_AS(permittivity(gaas_model(), -1.0), nanogp::DomainError);
    auto bad = gaas_model();
    bad.omega_l = 0.5 * bad.omega_r;
    CHECK_THROWS_AS(validate(bad), nanogp::DomainError);
    bad = gaas_model();
    bad.gamma_e = -1.0;
    CHECK_THROWS_AS(validate(bad), nanogp::DomainError);
    CHECK_THROWS_AS(named_model("gold"), nanogp::DomainError);
    CHECK(named_model("GaAs").omega_r == gaas_model().omega_r);
}

TEST_CASE("surface resonance") {
    const auto m = gaas_model();
    CHECK(std::abs(lspp_resonance(m) / m.omega_r - 1.074) < 1e-3);

    auto lossless = m;
    lossless.gamma_e = 0.0;
    const double closed = std::sqrt((m.eps_inf * m.omega_l * m.omega_l + 2.0 * m.omega_r * m.omega_r) /
                                    (m.eps_inf + 2.0));
    CHECK(rel_diff(lspp_resonance(lossless), closed) < 1e-10);

    auto damped = m;
    damped.gamma_e = 0.0452 * m.omega_r;
    CHECK(rel_diff(lspp_resonance(damped), scan_root(damped, 100000)) < 1e-10);
    damped.gamma_e = 0.452 * m.omega_r;  // Re ε stays above -2
    CHECK_THROWS_AS(lspp_resonance(damped), nanogp::ResonanceNotFound);
    CHECK(rel_diff(lspp_resonance(m), scan_root(m, 100000)) < 1e-10);

    auto overdamped = m;
    overdamped.gamma_e = 5.0 * m.omega_r;
    CHECK_THROWS_AS(lspp_resonance(overdamped), nanogp::ResonanceNotFound);
}
