// kernels_serial.cpp: Row evaluation and the serial reference kernel

#include "nanogp/errors.hpp"
#include "nanogp/sweep/kernels.hpp"

namespace nanogp::sweep {

std::vector<PointOutcome> evaluate_row(const Row& row, const EvalSettings& settings) {
    std::vector<PointOutcome> out(row.distances.size());
    ldos::RadialIntegrals cache;
    for (std::size_t k = 0; k < row.distances.size(); ++k) {
        SphereSystem s;
        s.material = row.model;
        s.radius = row.radius;
        s.atom_distance = row.distances[k];
        PointOutcome& p = out[k];
        try {
            validate_geometry(s);
            if (row.need_medium) {
                p.ldos = ldos::evaluate(s, row.omega, settings.series, settings.quad, &cache);
            } else {
                p.ldos.omega = row.omega;
                p.ldos.r_a = s.atom_distance;
                p.ldos.rho = ldos::pldos(s, row.omega, settings.series);
                p.ldos.rho_v = p.ldos.rho;
                p.ldos.rho_normalized = p.ldos.rho / ldos::rho_vacuum(row.omega);
            }
            p.ok = true;
        } catch (const ConvergenceError& e) {
            p.convergence_failure = true;
            p.error = e.what();
        } catch (const RangeError& e) {
            p.convergence_failure = true;
            p.error = e.what();
        } catch (const Error& e) {
            p.error = e.what();
        }
    }
    return out;
}

Outcomes evaluate_serial(const std::vector<Row>& rows, const EvalSettings& settings) {
    Outcomes out;
    out.reserve(rows.size());
    for (const Row& row : rows) {
        out.push_back(evaluate_row(row, settings));
    }
    return out;
}

} // namespace nanogp::sweep
