#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>

#include "nanogp/errors.hpp"
#include "nanogp/ldos.hpp"
#include "nanogp/material.hpp"
#include "nanogp/qdynamics.hpp"
#include "nanogp/thermal.hpp"

using namespace nanogp;
using namespace nanogp::qdynamics;

namespace {

constexpr double pi = std::numbers::pi;
const double wr = material::gaas_model().omega_r;

ldos::LdosResult vacuum(double w) {
    ldos::LdosResult r;
    r.rho = ldos::rho_vacuum(w);
    r.rho_v = r.rho;
    r.rho_normalized = 1.0;
    r.omega = w;
    return r;
}

// Rates with a given Q and Γ+ = 1.
RateSet rates_with(double Q) {
    const double n = 0.5 * (1.0 / Q - 1.0);
    auto r = vacuum(wr);
    r.rho_normalized = 1.0 / (1.0 + 2.0 * n);
    return transition_rates(r, n, 1.0);
}

SphereSystem reference_system() {
    SphereSystem s;
    s.material = material::gaas_model();
    s.radius = 700e-9;
    s.atom_distance = 1.7e-6;
    return s;
}

} // namespace

TEST_CASE("rates in vacuum at zero temperature") {
    const auto r = transition_rates(vacuum(wr), 0.0, 2.5);
    CHECK(r.gamma_down == 2.5);
    CHECK(r.gamma_up == 0.0);
    CHECK(r.Q == 1.0);
}

TEST_CASE("equilibrium rates carry 1 + n and n") {
    const double n = thermal::bose_einstein(wr, 600.0);
    const auto r = transition_rates(vacuum(wr), n, 1.0);
    CHECK(r.gamma_down == Catch::Approx(1.0 + n).epsilon(1e-15));
    CHECK(r.gamma_up == Catch::Approx(n).epsilon(1e-15));
    CHECK(r.Q == Catch::Approx(r.gamma_minus / r.gamma_plus).epsilon(1e-15));
}

TEST_CASE("rate invariants") {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
        auto rho = vacuum(wr);
        rho.rho_normalized = 0.01 + 100.0 * u(rng);
        const auto r = transition_rates(rho, 20.0 * u(rng), 1e-3 + u(rng));
        CHECK(r.gamma_down >= r.gamma_up);
        CHECK(r.gamma_up >= 0.0);
        CHECK(r.gamma_plus > 0.0);
        CHECK(std::abs(r.Q) <= 1.0);
    }
    CHECK_THROWS_AS(transition_rates(vacuum(wr), -1.0, 1.0), DataError);
    CHECK_THROWS_AS(transition_rates(vacuum(wr), 0.0, 0.0), DomainError);
}

TEST_CASE("surface resonance enhances the decay") {
    const double w = 1.074 * wr;
    const auto rho = ldos::evaluate(reference_system(), w);
    const auto r = transition_rates(rho, 0.0, 1e-5 * w);
    CHECK(r.gamma_plus / r.Gamma0 > 10.0);
}

TEST_CASE("density matrix: initial and steady states") {
    const double th = 1.1;
    const auto r = rates_with(0.7);
    const auto s0 = density_matrix(0.0, th, r, 3.0);
    CHECK(s0.rho11 == Catch::Approx(std::pow(std::sin(th / 2), 2)).epsilon(1e-15));
    CHECK(s0.rho22 == Catch::Approx(std::pow(std::cos(th / 2), 2)).epsilon(1e-15));
    CHECK(std::abs(s0.rho12 - 0.5 * std::sin(th)) < 1e-15);
    const auto inf = density_matrix(60.0, th, r, 3.0);
    CHECK(inf.rho11 == Catch::Approx((r.gamma_plus + r.gamma_minus) / (2 * r.gamma_plus)).epsilon(1e-12));
    CHECK(inf.rho22 == Catch::Approx((r.gamma_plus - r.gamma_minus) / (2 * r.gamma_plus)).margin(1e-12));
    CHECK(std::abs(inf.rho12) < 1e-12);
}

TEST_CASE("density matrix: trace and positivity") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const auto r = rates_with(0.01 + 0.99 * u(rng));
        const auto s = density_matrix(10.0 * u(rng), pi * u(rng), r, 50.0 * u(rng));
        CHECK(std::abs(s.rho11 + s.rho22 - 1.0) < 1e-12);
        CHECK(s.rho11 >= 0.0);
        CHECK(s.rho22 >= 0.0);
        CHECK(s.rho11 <= 1.0);
        CHECK(std::norm(s.rho12) <= s.rho11 * s.rho22 + 1e-15);
    }
}

TEST_CASE("closed form against RK4") {
    const auto r = rates_with(0.8);
    const double Omega = 50.0;
    const auto a = density_matrix(0.3, pi / 4, r, Omega);
    const auto b = density_matrix_ode_oracle(0.3, pi / 4, r, Omega, 0.0);
    CHECK(std::abs(a.rho11 - b.rho11) < 1e-8);
    CHECK(std::abs(a.rho22 - b.rho22) < 1e-8);
    CHECK(std::abs(a.rho12 - b.rho12) < 1e-8);
    for (double t = 0.0; t <= 10.0; t += 0.5) {
        const auto c = density_matrix(t, pi / 3, r, Omega);
        const auto d = density_matrix_ode_oracle(t, pi / 3, r, Omega, 0.0);
        CHECK(std::abs(c.rho11 - d.rho11) < 1e-8);
        CHECK(std::abs(c.rho22 - d.rho22) < 1e-8);
        CHECK(std::abs(c.rho12 - d.rho12) < 1e-8);
        CHECK(std::abs(d.rho11 + d.rho22 - 1.0) < 1e-12);
    }
}

TEST_CASE("frequency shift only rotates the coherence") {
    const auto r = rates_with(0.6);
    const auto a = density_matrix_ode_oracle(2.0, 1.0, r, 40.0, 0.0);
    const auto b = density_matrix_ode_oracle(2.0, 1.0, r, 40.0, 3.0);
    CHECK(std::abs(a.rho11 - b.rho11) < 1e-14);
    CHECK(std::abs(a.rho22 - b.rho22) < 1e-14);
    CHECK(std::abs(std::abs(a.rho12) - std::abs(b.rho12)) < 1e-10);
    CHECK(std::abs(a.rho12 - b.rho12) > 1e-3);
    CHECK_THROWS_AS(density_matrix_ode_oracle(1e3, 1.0, r, 40.0, 0.0, 1000), DomainError);
}

TEST_CASE("eigen path endpoints") {
    const double th = 0.9;
    const auto r = rates_with(1.0);
    const auto p0 = eigen_path(density_matrix(0.0, th, r, 2.0), th, r);
    CHECK(p0.eps_minus == Catch::Approx(0.0).margin(1e-15));
    CHECK(p0.eps_plus == Catch::Approx(1.0).epsilon(1e-15));
    // |ψ+> = e^{iΩt} cos(θt/2)|1> + sin(θt/2)|2> starts at θt = π - θ0
    CHECK(p0.theta_t == Catch::Approx(pi - th).epsilon(1e-14));
    const auto pinf = eigen_path(density_matrix(50.0, th, r, 2.0), th, r);
    CHECK(pinf.eps_plus == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigen path against a generic eigensolver") {
    const double th = pi / 4;
    const auto r = rates_with(0.6);
    const double Omega = 3.0;
    const auto st = density_matrix(0.7, th, r, Omega);
    const auto p = eigen_path(st, th, r);
    Eigen::Matrix2cd m;
    m << st.rho11, st.rho12, std::conj(st.rho12), st.rho22;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m);
    CHECK(std::abs(p.eps_minus - es.eigenvalues()(0)) < 1e-12);
    CHECK(std::abs(p.eps_plus - es.eigenvalues()(1)) < 1e-12);
    const Eigen::Vector2cd v = es.eigenvectors().col(1);
    const double theta_eig = 2.0 * std::atan2(std::abs(v(1)), std::abs(v(0)));
    CHECK(std::abs(p.theta_t - theta_eig) < 1e-12);
    CHECK(p.eps_plus + p.eps_minus == Catch::Approx(1.0).epsilon(1e-15));
    CHECK(p.theta_t >= 0.0);
    CHECK(p.theta_t <= pi);
}

TEST_CASE("fully mixed state uses the previous angle") {
    RateSet r = rates_with(1.0);
    r.Q = 0.0;
    const auto st = density_matrix(80.0, pi / 2, r, 1.0);
    CHECK_THROWS_AS(eigen_path(st, pi / 2, r), DomainError);
    CHECK(eigen_path(st, pi / 2, r, 0.4).theta_t == 0.4);
}

TEST_CASE("scattering Lamb shift") {
    const double w = 1.074 * wr;
    auto s = reference_system();
    s.atom.gamma0 = 1e-5 * w;
    const double L = lamb_shift_scattering(s, w);
    CHECK(std::abs(L) / w < 1e-2);
    CHECK(L != 0.0);
    auto hot = s;
    hot.temperatures = {600.0, 100.0};
    CHECK(lamb_shift_scattering(hot, w) == L);
    auto tiny = s;
    tiny.radius = 1e-12;
    CHECK(std::abs(lamb_shift_scattering(tiny, w)) < 1e-12 * s.atom.gamma0);
}
