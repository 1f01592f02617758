#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "frozen_values.hpp"
#include "nanogp/errors.hpp"
#include "nanogp/quadrature.hpp"
#include "nanogp/specfun.hpp"
#include "test_util.hpp"

using namespace nanogp::specfun;
using testutil::rel_diff;

namespace {

const Complex I{0.0, 1.0};

std::vector<Complex> sample_points() {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(0.05, 40.0);
    std::uniform_real_distribution<double> im(-8.0, 8.0);
    std::vector<Complex> z{{1.0, 0.0}, {0.3, 0.0}, {2.0, 0.5}, {5.0, 1.0}, {0.18, 0.25}, {60.0, 3.0}};
    for (int k = 0; k < 20; ++k) {
        z.emplace_back(re(rng), im(rng));
    }
    return z;
}

} // namespace

TEST_CASE("j_n closed forms and limits") {
    CHECK(rel_diff(sph_bessel_j(0, 1.0), std::sin(1.0)) < 1e-15);
    CHECK(sph_bessel_j(1, 0.0) == Complex{});
    CHECK(sph_bessel_j(0, 0.0) == Complex{1.0, 0.0});
    const Complex z{0.7, -1.9};
    CHECK(rel_diff(sph_bessel_j(0, z), std::sin(z) / z) < 1e-14);
    CHECK(rel_diff(sph_bessel_j(1, z), std::sin(z) / (z * z) - std::cos(z) / z) < 1e-13);
}

TEST_CASE("j_n and h_n match 50-digit references") {
    CHECK(rel_diff(sph_bessel_j(5, {2.0, 0.5}), frozen::j5_2p05i) < 1e-12);
    CHECK(rel_diff(sph_hankel1(3, {5.0, 1.0}), frozen::h3_5p1i) < 1e-12);
    CHECK(rel_diff(sph_bessel_j(30, {60.0, 3.0}), frozen::j30_60p3i) < 1e-10);
    CHECK(rel_diff(sph_bessel_j(40, 0.3), frozen::j40_03) < 1e-12);
    CHECK(rel_diff(sph_hankel1(40, 0.3).imag(), frozen::y40_03) < 1e-12);
}

TEST_CASE("h_0 closed form") {
    for (double x : {0.1, 1.0, 7.5, 120.0}) {
        CHECK(rel_diff(sph_hankel1(0, x), -I * std::exp(I * x) / x) < 1e-14);
    }
}

TEST_CASE("Wronskian j_n dh_n - dj_n h_n = i/z^2") {
    for (const Complex z : sample_points()) {
        const auto j = sph_bessel_j_family(60, z);
        const auto h = sph_hankel1_family(60, z);
        for (int n = 0; n <= 60; ++n) {
            const Complex p = (j.at(n) * h.riccati_at(n)).value(), q = (j.riccati_at(n) * h.at(n)).value();
            // relative to the terms, which grow as e^{2|Im z|} while i/z^2 does not
            const double scale = std::max({1.0, std::abs(p * z * z), std::abs(q * z * z)});
            INFO("n = " << n << ", z = " << z);
            CHECK(std::abs((p - q) * z * z - I) < 1e-10 * scale);
        }
    }
}

TEST_CASE("three-term recurrence holds for both families") {
    for (const Complex z : sample_points()) {
        for (const bool bessel : {true, false}) {
            const auto f = bessel ? sph_bessel_j_family(40, z) : sph_hankel1_family(40, z);
            for (int n = 1; n < 40; ++n) {
                // divide through by the largest of the three terms
                const Scaled fm = f.at(n - 1), f0 = f.at(n), fp = f.at(n + 1);
                const double e = std::max({fm.log_abs(), f0.log_abs() + std::log(std::abs((2.0 * n + 1.0) / z)),
                                           fp.log_abs()});
                const Scaled inv{1.0, -e};
                const Complex lhs = (fm * inv).value() + (fp * inv).value();
                const Complex rhs = (2.0 * n + 1.0) / z * (f0 * inv).value();
                INFO("n = " << n << ", z = " << z << ", j family = " << bessel);
                CHECK(std::abs(lhs - rhs) < 1e-10);
            }
        }
    }
}

TEST_CASE("Riccati derivative of j_n") {
    const Complex z{0.4, 2.2};
    CHECK(rel_diff(riccati_deriv_j(0, z), std::cos(z) / z) < 1e-14);
    CHECK(rel_diff(riccati_deriv_j(1, z), sph_bessel_j(0, z) - sph_bessel_j(1, z) / z) < 1e-14);

    const Complex z4{1.3, -0.2};
    const double h = 1e-6;
    const auto zj = [](Complex t) { return t * sph_bessel_j(4, t); };
    const Complex fd = (zj(z4 + h) - zj(z4 - h)) / (2.0 * h) / z4;
    CHECK(rel_diff(riccati_deriv_j(4, z4), fd) < 1e-8);
    CHECK(rel_diff(riccati_deriv_j(4, z4), frozen::dj4_13m02i) < 1e-12);
}

TEST_CASE("Legendre values") {
    for (int n = 0; n <= 30; ++n) {
        CHECK(legendre_p(n, 1.0) == Catch::Approx(1.0).epsilon(1e-15));
    }
    CHECK(legendre_p(2, 0.0) == -0.5);
    CHECK(legendre_p(3, 0.3) == Catch::Approx(0.5 * (5 * 0.027 - 0.9)).epsilon(1e-15));
}

TEST_CASE("Legendre orthogonality by quadrature") {
    for (int n = 0; n <= 10; ++n) {
        for (int m = 0; m <= 10; ++m) {
            const auto r = adaptive_quadrature(
                [&](double th) -> Complex {
                    return legendre_p(n, std::cos(th)) * legendre_p(m, std::cos(th)) * std::sin(th);
                },
                0.0, std::numbers::pi, {.rel_tol = 1e-12, .abs_tol = 1e-14});
            const double expect = n == m ? 2.0 / (2.0 * n + 1.0) : 0.0;
            INFO("n = " << n << ", m = " << m);
            CHECK(std::abs(r.value.real() - expect) < 1e-10);
        }
    }
}

TEST_CASE("dP_n/dtheta") {
    for (int n = 0; n <= 20; ++n) {
        CHECK(legendre_dp_dtheta(n, 0.0) == 0.0);
        const double th = 1.1, h = 1e-6;
        const double fd = (legendre_p(n, std::cos(th + h)) - legendre_p(n, std::cos(th - h))) / (2 * h);
        CHECK(std::abs(legendre_dp_dtheta(n, th) - fd) < 1e-7 * std::max(1.0, std::abs(fd)));
    }
    const auto t = legendre_table(25, 0.8);
    for (int n = 0; n <= 25; ++n) {
        CHECK(t.p[n] == Catch::Approx(legendre_p(n, std::cos(0.8))).epsilon(1e-13));
    }
}

TEST_CASE("special functions report domain and range problems") {
    CHECK_THROWS_AS(sph_hankel1(0, 0.0), nanogp::DomainError);
    CHECK_THROWS_AS(riccati_deriv_j(2, 0.0), nanogp::DomainError);
    CHECK_THROWS_AS(sph_bessel_j(max_order + 1, 1.0), nanogp::RangeError);
    CHECK_THROWS_AS(sph_bessel_j(-1, 1.0), nanogp::RangeError);
    CHECK_THROWS_AS(sph_bessel_j(300, 0.01), nanogp::RangeError);
    CHECK_THROWS_AS(sph_hankel1(300, 0.01), nanogp::RangeError);
    CHECK_THROWS_AS(legendre_p(2, 1.5), nanogp::DomainError);
    CHECK_THROWS_AS(legendre_table(3, 4.0), nanogp::DomainError);
}

TEST_CASE("family values stay finite in scaled form") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> re(1e-3, 200.0), im(-50.0, 50.0);
    for (int k = 0; k < 200; ++k) {
        const Complex z{re(rng), im(rng)};
        const auto j = sph_bessel_j_family(500, z);
        const auto h = sph_hankel1_family(500, z);
        for (int n = 0; n <= 500; n += 7) {
            REQUIRE(std::isfinite(j.at(n).log_abs()));
            REQUIRE(std::isfinite(h.at(n).log_abs()));
            REQUIRE(std::isfinite(std::abs(j.riccati[n])));
            REQUIRE(std::isfinite(std::abs(h.riccati[n])));
        }
    }
}
