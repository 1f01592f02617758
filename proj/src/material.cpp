// material.cpp: Drude-Lorentz permittivity and the surface phonon-polariton resonance

#include "nanogp/material.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/roots.hpp>

#include "nanogp/errors.hpp"

namespace nanogp::material {

void validate(const PermittivityModel& m) {
    if (!(m.eps_inf > 0.0)) {
        throw DomainError("permittivity model: eps_inf must be > 0");
    }
    if (!(m.omega_r > 0.0) || !(m.omega_l > m.omega_r)) {
        throw DomainError("permittivity model: need omega_l > omega_r > 0");
    }
    if (!(m.gamma_e >= 0.0) || !std::isfinite(m.gamma_e)) {
        throw DomainError("permittivity model: gamma_e must be finite and >= 0");
    }
}

std::complex<double> permittivity(const PermittivityModel& m, double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("permittivity: omega must be finite and > 0");
    }
    const std::complex<double> loss{0.0, m.gamma_e * omega};
    const double w2 = omega * omega;
    return m.eps_inf * (w2 - m.omega_l * m.omega_l + loss) / (w2 - m.omega_r * m.omega_r + loss);
}

PermittivityModel gaas_model() {
    return {11.0, 0.550e14, 0.506e14, 0.00452e14};
}

double lspp_resonance(const PermittivityModel& m) {
    validate(m);
    const double lo = m.omega_r * (1.0 + 1e-6);
    const double hi = m.omega_l;
    const auto f = [&m](double w) { return permittivity(m, w).real() + 2.0; };
    // With damping Re ε + 2 is positive just above ω_r as well; take the last upward
    // crossing on a uniform scan of the bracket.
    constexpr int scan = 4096;
    double a = hi;
    double b = hi;
    double f_a = f(hi);
    double f_b = f_a;
    bool found = f_b == 0.0;
    for (int k = scan - 1; k >= 0 && !found; --k) {
        const double w = lo + (hi - lo) * k / scan;
        const double fw = f(w);
        if (fw < 0.0 && f_b >= 0.0) {
            a = w;
            f_a = fw;
            found = true;
            break;
        }
        b = w;
        f_b = fw;
    }
    if (!found) {
        throw ResonanceNotFound("lspp_resonance: Re eps + 2 has no sign change on [omega_r, omega_l]");
    }
    if (f_b == 0.0) {
        return b;
    }
    std::uintmax_t iterations = 200;
    const auto tol = [](double u, double v) { return std::abs(v - u) <= 1e-12 * std::abs(u); };
    const auto [left, right] = boost::math::tools::toms748_solve(f, a, b, f_a, f_b, tol, iterations);
    return 0.5 * (left + right);
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

} // namespace

PermittivityModel named_model(const std::string& name) {
    if (lower(name) == "gaas") {
        return gaas_model();
    }
    throw DomainError("unknown material '" + name + "'");
}

std::vector<std::string> model_names() {
    return {"gaas"};
}

} // namespace nanogp::material
