#include <catch_amalgamated.hpp>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "nanogp/constants.hpp"
#include "nanogp/errors.hpp"
#include "nanogp/ldos.hpp"
#include "nanogp/material.hpp"
#include "test_util.hpp"

using namespace nanogp;
using testutil::rel_diff;

namespace {

constexpr double pi = std::numbers::pi;
const auto gaas = material::gaas_model();
const double wr = gaas.omega_r;

SphereSystem system_at(double ra, double a = 700e-9) {
    SphereSystem s;
    s.material = gaas;
    s.radius = a;
    s.atom_distance = ra;
    return s;
}

// Power radiated to infinity: 3/2 Σ n(n+1)(2n+1) |j_n(y) + B_n h_n(y)|² / y².
double radiated_over_vacuum(const SphereSystem& s, double w) {
    const double y = w * s.atom_distance / constants::c;
    double sum = 0.0;
    for (int n = 1; n <= 60; ++n) {
        const auto c = mie::mie_coefficients(s.material, s.radius, w, n);
        const auto j = specfun::sph_bessel_j(n, y);
        const auto h = specfun::sph_hankel1(n, y);
        sum += n * (n + 1.0) * (2.0 * n + 1.0) * std::norm(j + c.B00 * h) / (y * y);
    }
    return 1.5 * sum;
}

} // namespace

TEST_CASE("vacuum density of states") {
    CHECK(rel_diff(ldos::rho_vacuum(pi * constants::c), 1.0 / constants::c) < 1e-15);
    CHECK(rel_diff(ldos::rho_vacuum(2.0 * wr), 4.0 * ldos::rho_vacuum(wr)) < 1e-15);
    const double c = constants::c;
    CHECK(rel_diff(ldos::rho_vacuum(0.506e14), 0.506e14 * 0.506e14 / (pi * pi * c * c * c)) < 1e-15);
    CHECK_THROWS_AS(ldos::rho_vacuum(0.0), DomainError);
}

TEST_CASE("partial LDOS: free-space and far limits") {
    const double w = 1.074 * wr;
    const auto tiny = system_at(1.7e-6, 1e-12);
    CHECK(rel_diff(ldos::pldos(tiny, w), ldos::rho_vacuum(w)) < 1e-10);
    const auto far = ldos::evaluate(system_at(2000e-6), w);
    CHECK(std::abs(far.rho_normalized - 1.0) < 1e-3);
}

TEST_CASE("partial LDOS peaks at the surface resonance") {
    const auto s = system_at(1.7e-6);
    CHECK(ldos::pldos(s, 1.074 * wr) / ldos::pldos(s, 0.9 * wr) > 1.0);
}

TEST_CASE("series and Green-tensor forms agree") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> fw(0.8, 1.3), fr(1.05, 8.0);
    for (int k = 0; k < 50; ++k) {
        const double w = fw(rng) * wr;
        const auto s = system_at(fr(rng) * 700e-9);
        CHECK(rel_diff(ldos::pldos_series(s, w), ldos::pldos_green(s, w)) < 1e-10);
    }
}

TEST_CASE("medium part vanishes for a lossless sphere") {
    auto s = system_at(1.7e-6);
    s.material.gamma_e = 0.0;
    CHECK(ldos::medium_pldos(s, 1.074 * wr) == 0.0);
    CHECK(ldos::medium_pldos_direct(s, 1.074 * wr) == 0.0);
}

TEST_CASE("medium part against direct volume integration at the resonance") {
    const auto s = system_at(1.7e-6);
    for (double f : {1.07, 1.074, 1.08}) {
        const double w = f * wr;
        CHECK(rel_diff(ldos::medium_pldos(s, w), ldos::medium_pldos_direct(s, w)) < 1e-6);
    }
}

TEST_CASE("medium part against direct volume integration at random points") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> fw(0.9, 1.2), fr(1.2, 4.0);
    for (int k = 0; k < 20; ++k) {
        const double w = fw(rng) * wr;
        const auto s = system_at(fr(rng) * 700e-9);
        INFO("omega/omega_r = " << w / wr << ", r_a/a = " << s.atom_distance / s.radius);
        CHECK(rel_diff(ldos::medium_pldos(s, w), ldos::medium_pldos_direct(s, w)) < 1e-6);
    }
}

TEST_CASE("explicit azimuthal integration matches the 2 pi factor") {
    const auto s = system_at(1.7e-6);
    const double w = 1.074 * wr;
    const specfun::QuadratureSpec q{.rel_tol = 1e-8};
    const double plain = ldos::medium_pldos_direct(s, w, {}, q, false);
    const double explicit_phi = ldos::medium_pldos_direct(s, w, {}, q, true);
    CHECK(rel_diff(plain, explicit_phi) < 1e-12);
}

TEST_CASE("radiated part equals rho - rho_m") {
    for (double f : {0.9, 1.0, 1.05, 1.074, 1.1, 1.2}) {
        for (double ra : {0.9e-6, 1.7e-6, 4e-6}) {
            const auto s = system_at(ra);
            const double w = f * wr;
            const auto r = ldos::evaluate(s, w);
            INFO("omega/omega_r = " << f << ", r_a = " << ra);
            CHECK(rel_diff(r.rho_v / ldos::rho_vacuum(w), radiated_over_vacuum(s, w)) < 1e-8);
        }
    }
}

TEST_CASE("0 <= rho_m <= rho over a grid") {
    for (int i = 0; i <= 30; ++i) {
        for (double ra : {0.75e-6, 1.0e-6, 1.7e-6, 5e-6}) {
            const double w = (0.9 + 0.01 * i) * wr;
            const auto r = ldos::evaluate(system_at(ra), w);
            CHECK(r.rho > 0.0);
            CHECK(r.rho_m >= 0.0);
            CHECK(r.rho_m <= r.rho);
            CHECK(r.rho_v == Catch::Approx(r.rho - r.rho_m));
        }
    }
}

TEST_CASE("radial integral cache is reused along a row") {
    const double w = 1.05 * wr;
    ldos::RadialIntegrals cache;
    const double first = ldos::medium_pldos(system_at(1.0e-6), w, {}, {}, &cache);
    CHECK(cache.omega == w);
    const double second = ldos::medium_pldos(system_at(3.0e-6), w, {}, {}, &cache);
    CHECK(first == ldos::medium_pldos(system_at(1.0e-6), w));
    CHECK(rel_diff(second, ldos::medium_pldos(system_at(3.0e-6), w)) < 1e-13);
}

TEST_CASE("geometry errors propagate") {
    CHECK_THROWS_AS(ldos::evaluate(system_at(0.5e-6), wr), GeometryError);
    CHECK_THROWS_AS(ldos::medium_pldos(system_at(0.7e-6), wr), GeometryError);
}
