#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "frozen_values.hpp"
#include "nanogp/constants.hpp"
#include "nanogp/errors.hpp"
#include "nanogp/ldos.hpp"
#include "nanogp/material.hpp"
#include "nanogp/thermal.hpp"
#include "test_util.hpp"

using namespace nanogp;
using testutil::rel_diff;

namespace {

const double wr = material::gaas_model().omega_r;

ldos::LdosResult reference_ldos(double w) {
    SphereSystem s;
    s.material = material::gaas_model();
    s.radius = 700e-9;
    s.atom_distance = 1.7e-6;
    return ldos::evaluate(s, w);
}

} // namespace

TEST_CASE("Bose-Einstein occupation") {
    CHECK(thermal::bose_einstein(wr, 0.0) == 0.0);
    const double T = 300.0;
    const double w = std::log(2.0) * constants::k_B * T / constants::hbar;
    CHECK(rel_diff(thermal::bose_einstein(w, T), 1.0) < 1e-14);
    CHECK(rel_diff(thermal::bose_einstein(1.074 * 0.506e14, 600.0), frozen::n_be_1074_600K) < 1e-14);
    const auto cold = thermal::bose_einstein_checked(wr, 0.1);
    CHECK(cold.underflow);
    CHECK(cold.value == 0.0);
    CHECK_FALSE(thermal::bose_einstein_checked(wr, 300.0).underflow);
    CHECK_THROWS_AS(thermal::bose_einstein(0.0, 300.0), DomainError);
    CHECK_THROWS_AS(thermal::bose_einstein(wr, -1.0), DomainError);
}

TEST_CASE("n_eff reduces to n in equilibrium") {
    const auto rho = reference_ldos(1.074 * wr);
    for (double T : {0.0, 100.0, 600.0}) {
        CHECK(thermal::n_effective(rho, 1.074 * wr, {T, T}) == thermal::bose_einstein(1.074 * wr, T));
    }
    auto no_medium = rho;
    no_medium.rho_m = 0.0;
    no_medium.rho_v = no_medium.rho;
    CHECK(thermal::n_effective(no_medium, wr, {600.0, 100.0}) == thermal::bose_einstein(wr, 600.0));
}

TEST_CASE("n_eff is the convex combination of the bath occupations") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> frac(0.0, 1.0), temp(0.0, 1000.0), fw(0.9, 1.2);
    for (int k = 0; k < 200; ++k) {
        ldos::LdosResult r;
        r.rho = 1.0 + 10.0 * frac(rng);
        r.rho_m = frac(rng) * r.rho;
        r.rho_v = r.rho - r.rho_m;
        const double w = fw(rng) * wr;
        const ThermalState t{temp(rng), temp(rng)};
        const double n0 = thermal::bose_einstein(w, t.T0), n1 = thermal::bose_einstein(w, t.T1);
        const double convex = (n0 * r.rho_v + n1 * r.rho_m) / r.rho;
        CHECK(std::abs(thermal::n_effective(r, w, t) - convex) <= 1e-14 * std::max(1.0, convex));
    }
}

TEST_CASE("reference configuration lies strictly between the bath occupations") {
    const double w = 1.074 * wr;
    const auto rho = reference_ldos(w);
    const double lo = thermal::bose_einstein(w, 100.0), hi = thermal::bose_einstein(w, 600.0);
    const double n = thermal::n_effective(rho, w, {600.0, 100.0});
    CHECK(n > lo);
    CHECK(n < hi);
}

TEST_CASE("invalid densities are rejected") {
    ldos::LdosResult r;
    r.rho = 1.0;
    r.rho_m = 2.0;
    CHECK_THROWS_AS(thermal::n_effective(r, wr, {300.0, 300.0}), DataError);
    r.rho = 0.0;
    r.rho_m = 0.0;
    CHECK_THROWS_AS(thermal::n_effective(r, wr, {300.0, 300.0}), DataError);
    r.rho = 1.0;
    r.rho_m = -0.1;
    CHECK_THROWS_AS(thermal::n_effective(r, wr, {300.0, 300.0}), DataError);
}
