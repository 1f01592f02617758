// gp.cpp: Geometric phase of the dissipative two-level atom

#include "nanogp/gp.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>

#include "nanogp/errors.hpp"

namespace nanogp::gp {

namespace {

using Complex = std::complex<double>;
constexpr double pi = std::numbers::pi;

void check_theta(double theta0) {
    if (!(theta0 >= 0.0 && theta0 <= pi)) {
        throw DomainError("theta0 outside [0, pi]");
    }
}

void check_omega(double Omega) {
    if (!(Omega > 0.0) || !std::isfinite(Omega)) {
        throw DomainError("Omega must be finite and > 0");
    }
}

// X(u) - cos θ0, where cos θ_t = -X and u = Γ+ t.
double x_minus_cos(double theta0, double Q, double u) {
    const double c = std::cos(theta0);
    const double s2 = std::sin(theta0) * std::sin(theta0);
    const double m = std::expm1(u);
    const double delta = m * (s2 - 2.0 * c * Q + Q * Q * m);
    const double d = std::sqrt(1.0 + delta);
    return (-Q * m - c * delta / (1.0 + d)) / d;
}

double prefactor(const ldos::LdosResult& rho, double Gamma0, double omega0) {
    return pi * pi * Gamma0 * rho.rho_normalized / (2.0 * omega0);
}

} // namespace

double gp_unitary(double theta0) {
    check_theta(theta0);
    return -pi * (1.0 - std::cos(theta0));
}

double dynamical_phase(double theta0, const qdynamics::RateSet& rates, double Omega, double t,
                       const specfun::QuadratureSpec& quad) {
    check_theta(theta0);
    check_omega(Omega);
    if (!(t >= 0.0)) {
        throw DomainError("dynamical_phase: t must be >= 0");
    }
    const double span = Omega * t;
    const double base = -0.5 * (1.0 - std::cos(theta0)) * span;
    if (span == 0.0) {
        return 0.0;
    }
    const double ratio = rates.gamma_plus / Omega;
    specfun::QuadratureSpec spec = quad;
    spec.abs_tol = std::max(spec.abs_tol, 1e-16 * span);
    const auto integrand = [&](double s) -> Complex { return x_minus_cos(theta0, rates.Q, ratio * s); };
    const auto r = specfun::adaptive_quadrature(integrand, 0.0, span, spec);
    return base + 0.5 * r.value.real();
}

double gp_exact(double theta0, const qdynamics::RateSet& rates, double Omega,
                const specfun::QuadratureSpec& quad) {
    check_omega(Omega);
    return dynamical_phase(theta0, rates, Omega, 2.0 * pi / Omega, quad);
}

double pancharatnam_phase(double theta0, const qdynamics::RateSet& rates, double Omega, double t) {
    check_theta(theta0);
    const auto st = qdynamics::density_matrix(t, theta0, rates, Omega);
    const double theta_t = std::atan2(2.0 * std::abs(st.rho12), st.rho11 - st.rho22);
    const double start = pi - theta0;
    const double cc = std::cos(0.5 * start) * std::cos(0.5 * theta_t);
    const double ss = std::sin(0.5 * start) * std::sin(0.5 * theta_t);
    const Complex overlap = cc * std::polar(1.0, Omega * t) + ss;
    return std::arg(overlap);
}

OracleResult gp_kinematic_oracle(double theta0, const qdynamics::RateSet& rates, double Omega,
                                 int steps, double periods) {
    check_theta(theta0);
    check_omega(Omega);
    if (steps < 16) {
        throw ConvergenceError("gp_kinematic_oracle: at least 16 steps required", 0.0, 0.0);
    }
    if (!(periods > 0.0)) {
        throw DomainError("gp_kinematic_oracle: periods must be > 0");
    }
    const double T = periods * 2.0 * pi / Omega;

    struct Eig {
        Eigen::Vector2cd plus;
        Eigen::Vector2cd minus;
        double eps_plus;
        double eps_minus;
    };
    // Eigenvectors in the gauge where the |2> amplitude is real and non-negative; a
    // vector along |1> alone gets the phase e^{iΩt}.
    const auto gauge = [Omega](Eigen::Vector2cd v, double t) {
        if (std::abs(v(1)) > 1e-150) {
            return Eigen::Vector2cd(v * (std::conj(v(1)) / std::abs(v(1))));
        }
        return Eigen::Vector2cd(v * (std::conj(v(0)) / std::abs(v(0))) * std::polar(1.0, Omega * t));
    };
    const auto eig = [&](double t) {
        const auto st = qdynamics::density_matrix(t, theta0, rates, Omega);
        Eigen::Matrix2cd rho;
        rho << st.rho11, st.rho12, std::conj(st.rho12), st.rho22;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(rho);
        // eigenvalues ascending
        Eig e;
        e.eps_minus = std::max(0.0, solver.eigenvalues()(0));
        e.eps_plus = std::max(0.0, solver.eigenvalues()(1));
        e.minus = gauge(solver.eigenvectors().col(0), t);
        e.plus = gauge(solver.eigenvectors().col(1), t);
        return e;
    };

    struct Pass {
        double phase;
        double pancharatnam;
    };
    const auto run = [&](int n) -> Pass {
        const double h = T / n;
        const Eig first = eig(0.0);
        Eig prev = first;
        double dyn_plus = 0.0;
        double dyn_minus = 0.0;
        for (int k = 1; k <= n; ++k) {
            const Eig cur = eig(h * k);
            dyn_plus += std::arg(prev.plus.dot(cur.plus));
            dyn_minus += std::arg(prev.minus.dot(cur.minus));
            prev = cur;
        }
        const double pan_plus = std::arg(first.plus.dot(prev.plus));
        const double pan_minus = std::arg(first.minus.dot(prev.minus));
        const double phase_plus = pan_plus - dyn_plus;
        const double w_plus = std::sqrt(first.eps_plus * prev.eps_plus) *
                              std::abs(first.plus.dot(prev.plus));
        const double w_minus = std::sqrt(first.eps_minus * prev.eps_minus) *
                               std::abs(first.minus.dot(prev.minus));
        double phase = phase_plus;
        if (w_minus > 0.0 && w_plus > 0.0) {
            // Σ_k w_k e^{iφ_k} with φ_+ kept unwrapped
            const Complex rel = 1.0 + (w_minus / w_plus) *
                                          std::polar(1.0, (pan_minus - dyn_minus) - phase_plus);
            phase += std::arg(rel);
        }
        return {phase, pan_plus};
    };
    const Pass coarse = run(steps);
    const Pass fine = run(2 * steps);
    const double diff = std::abs(fine.phase - coarse.phase);
    const double extrapolated = (4.0 * fine.phase - coarse.phase) / 3.0;
    if (!(diff <= 1e-4)) {
        throw ConvergenceError("gp_kinematic_oracle: step count too small", extrapolated, diff);
    }
    return {extrapolated, fine.pancharatnam, diff};
}

double gp_approx(double theta0, const ldos::LdosResult& rho, double n_eff, double Gamma0,
                 double omega0) {
    return gp_unitary(theta0) - delta_phi_total(theta0, rho, n_eff, Gamma0, omega0);
}

double delta_phi_medium(double theta0, const ldos::LdosResult& rho, double Gamma0, double omega0) {
    check_theta(theta0);
    const double s = std::sin(theta0);
    return prefactor(rho, Gamma0, omega0) * s * s * (std::cos(theta0) + 2.0);
}

double delta_phi_noneq(double theta0, const ldos::LdosResult& rho, double n_eff, double Gamma0,
                       double omega0) {
    check_theta(theta0);
    const double s = std::sin(theta0);
    return 2.0 * prefactor(rho, Gamma0, omega0) * n_eff * s * s * std::cos(theta0);
}

double delta_phi_total(double theta0, const ldos::LdosResult& rho, double n_eff, double Gamma0,
                       double omega0) {
    check_theta(theta0);
    const double s = std::sin(theta0);
    const double c = std::cos(theta0);
    return prefactor(rho, Gamma0, omega0) * s * s * (c + 2.0 * n_eff * c + 2.0);
}

GpResult evaluate(double theta0, const ldos::LdosResult& rho, double n_eff, double Gamma0,
                  double omega0, double Omega, const specfun::QuadratureSpec& quad) {
    const auto rates = qdynamics::transition_rates(rho, n_eff, Gamma0);
    GpResult r;
    r.phi0 = gp_unitary(theta0);
    r.phi_exact = gp_exact(theta0, rates, Omega, quad);
    r.phi_approx = gp_approx(theta0, rho, n_eff, Gamma0, omega0);
    r.dphi_m = delta_phi_medium(theta0, rho, Gamma0, omega0);
    r.dphi_outeq = delta_phi_noneq(theta0, rho, n_eff, Gamma0, omega0);
    r.dphi_total = std::abs(r.phi_approx - r.phi0);
    r.pancharatnam = pancharatnam_phase(theta0, rates, Omega, 2.0 * pi / Omega);
    return r;
}

} // namespace nanogp::gp
