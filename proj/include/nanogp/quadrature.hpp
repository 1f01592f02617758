// quadrature.hpp: Global adaptive Gauss–Kronrod (7/15) quadrature, scalar and vector-valued

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace nanogp::specfun {

struct QuadratureSpec {
    double rel_tol{1e-10};
    double abs_tol{0.0};
    int max_subdivisions{2000};
};

struct QuadratureResult {
    std::complex<double> value;
    double error{0.0};     // estimated absolute error
    int subdivisions{0};   // number of intervals in the final partition
};

struct VectorQuadratureResult {
    std::vector<std::complex<double>> value;
    std::vector<double> error;
    int subdivisions{0};
};

using ScalarIntegrand = std::function<std::complex<double>(double)>;

// Fills out[0..components) with the integrand components at x.
using VectorIntegrand = std::function<void(double x, std::span<std::complex<double>> out)>;

// Throws DomainError for an empty/reversed interval or invalid tolerances, ConvergenceError
// (carrying the best estimate) when the tolerance is not met within max_subdivisions.
QuadratureResult adaptive_quadrature(const ScalarIntegrand& f, double a, double b,
                                     const QuadratureSpec& spec = {});

// Every component i must satisfy err_i <= max(abs_tol, rel_tol*|I_i|). All components
// share one partition; an interval is refined while any component still needs it.
// On failure the ConvergenceError carries the worst component's estimate.
VectorQuadratureResult adaptive_quadrature(const VectorIntegrand& f, int components, double a,
                                           double b, const QuadratureSpec& spec = {});

} // namespace nanogp::specfun
