// qdynamics.cpp: Transition rates and reduced density-matrix evolution of the atom

#include "nanogp/qdynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "nanogp/constants.hpp"
#include "nanogp/errors.hpp"

namespace nanogp::qdynamics {

namespace {

using Complex = std::complex<double>;

void check_theta(double theta0) {
    if (!(theta0 >= 0.0 && theta0 <= std::numbers::pi)) {
        throw DomainError("theta0 outside [0, pi]");
    }
}

} // namespace

RateSet transition_rates(const ldos::LdosResult& rho, double n_eff, double Gamma0) {
    if (!(Gamma0 > 0.0) || !std::isfinite(Gamma0)) {
        throw DomainError("transition_rates: Gamma0 must be finite and > 0");
    }
    if (!(rho.rho_normalized > 0.0) || !std::isfinite(rho.rho_normalized)) {
        throw DataError("transition_rates: rho/rho0 must be finite and > 0");
    }
    if (!(n_eff >= 0.0) || !std::isfinite(n_eff)) {
        throw DataError("transition_rates: n_eff must be finite and >= 0");
    }
    const double g = Gamma0 * rho.rho_normalized;
    RateSet r;
    r.gamma_down = g * (1.0 + n_eff);
    r.gamma_up = g * n_eff;
    r.gamma_plus = g * (1.0 + 2.0 * n_eff);
    r.gamma_minus = g;
    r.Q = 1.0 / (1.0 + 2.0 * n_eff);
    r.n_eff = n_eff;
    r.Gamma0 = Gamma0;
    return r;
}

AtomState density_matrix(double t, double theta0, const RateSet& rates, double Omega) {
    check_theta(theta0);
    if (!(t >= 0.0)) {
        throw DomainError("density_matrix: t must be >= 0");
    }
    const double u = rates.gamma_plus * t;
    const double decayed = -std::expm1(-u);  // 1 - e^{-u}
    const double kept = std::exp(-u);
    const double s = std::sin(0.5 * theta0);
    const double c = std::cos(0.5 * theta0);
    AtomState st;
    st.t = t;
    st.rho11 = s * s * kept + 0.5 * (1.0 + rates.Q) * decayed;
    st.rho22 = c * c * kept + 0.5 * (1.0 - rates.Q) * decayed;
    st.rho12 = 0.5 * std::sin(theta0) * std::exp(-0.5 * u) * std::polar(1.0, Omega * t);
    return st;
}

AtomState density_matrix_ode_oracle(double t, double theta0, const RateSet& rates, double omega0,
                                    double Lambda, long max_steps) {
    check_theta(theta0);
    if (!(t >= 0.0)) {
        throw DomainError("density_matrix_ode_oracle: t must be >= 0");
    }
    const double w = omega0 + Lambda;
    double h_max = std::numeric_limits<double>::infinity();
    if (rates.gamma_plus > 0.0) {
        h_max = 1e-3 / rates.gamma_plus;
    }
    if (w != 0.0) {
        h_max = std::min(h_max, 1e-2 / std::abs(w));
    }
    long steps = 1;
    if (std::isfinite(h_max)) {
        const double needed = std::ceil(t / h_max);
        if (needed > static_cast<double>(max_steps)) {
            throw DomainError("density_matrix_ode_oracle: step limit exceeded");
        }
        steps = std::max(1L, static_cast<long>(needed));
    }
    const double h = t / static_cast<double>(steps);

    // y = (ρ11, ρ22, ρ12)
    using State = std::array<Complex, 3>;
    const double down = rates.gamma_down;
    const double up = rates.gamma_up;
    const Complex coherence{-0.5 * (down + up), w};
    const auto rhs = [&](const State& y) -> State {
        return {-up * y[0] + down * y[1], up * y[0] - down * y[1], coherence * y[2]};
    };
    const auto axpy = [](const State& y, double a, const State& k) -> State {
        return {y[0] + a * k[0], y[1] + a * k[1], y[2] + a * k[2]};
    };
    const double s = std::sin(0.5 * theta0);
    const double c = std::cos(0.5 * theta0);
    State y{Complex{s * s}, Complex{c * c}, Complex{s * c}};
    for (long i = 0; i < steps; ++i) {
        const State k1 = rhs(y);
        const State k2 = rhs(axpy(y, 0.5 * h, k1));
        const State k3 = rhs(axpy(y, 0.5 * h, k2));
        const State k4 = rhs(axpy(y, h, k3));
        for (int j = 0; j < 3; ++j) {
            y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
    }
    return {y[0].real(), y[1].real(), y[2], t};
}

EigenPath eigen_path(const AtomState& st, double theta0, const RateSet& rates,
                     std::optional<double> previous_theta) {
    check_theta(theta0);
    // ε+ - ε- from θ0, Q and Γ+ t
    const double e = std::exp(-rates.gamma_plus * st.t);
    const double diff = std::cos(theta0) * e + rates.Q * std::expm1(-rates.gamma_plus * st.t);
    const double coh2 = std::sin(theta0) * std::sin(theta0) * e;  // 4|ρ12|²
    const double split = std::sqrt(coh2 + diff * diff);             // ε+ - ε-
    EigenPath p;
    // ε- = 2 det ρ / (1 + split), det ρ = (1 - split²)/4
    const double det = std::max(0.0, st.rho11 * st.rho22 - std::norm(st.rho12));
    p.eps_minus = 2.0 * det / (1.0 + split);
    p.eps_plus = 1.0 - p.eps_minus;
    if (split < 1e-12) {
        if (!previous_theta) {
            throw DomainError("eigen_path: degenerate eigenvalues and no previous theta");
        }
        p.theta_t = *previous_theta;
        return p;
    }
    p.theta_t = std::atan2(2.0 * std::abs(st.rho12), st.rho11 - st.rho22);
    return p;
}

double lamb_shift_scattering(const SphereSystem& s, double omega0, const mie::SeriesControl& ctl) {
    if (!(s.atom.gamma0 >= 0.0)) {
        throw DomainError("lamb_shift_scattering: gamma0 must be >= 0");
    }
    const auto g = mie::green_scat_rr_00(s, omega0, ctl);
    return -(3.0 * std::numbers::pi * constants::c * s.atom.gamma0 / omega0) * g.real();
}

} // namespace nanogp::qdynamics
