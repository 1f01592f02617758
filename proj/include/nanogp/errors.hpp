// errors.hpp: Exception types shared by the numerics and the sweep runner

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace nanogp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (ω ≤ 0, z = 0 for h_n, ...).
struct DomainError : Error {
    using Error::Error;
};

// Result or intermediate leaves the representable/stable range of the algorithm.
struct RangeError : Error {
    using Error::Error;
};

// Atom inside the sphere, source outside, non-positive radius.
struct GeometryError : Error {
    using Error::Error;
};

// Inconsistent physical input data, e.g. ρ_m > ρ.
struct DataError : Error {
    using Error::Error;
};

struct ResonanceNotFound : Error {
    using Error::Error;
};

// Iterative procedure (quadrature, multipole series, oracle refinement) did not reach
// its tolerance. Carries the best available estimate.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, std::complex<double> best, double error)
        : Error(what), best_estimate(best), error_estimate(error) {}
    std::complex<double> best_estimate;
    double error_estimate;
};

// Invalid sweep configuration; message names the offending field.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace nanogp
