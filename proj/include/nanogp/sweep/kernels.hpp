// kernels.hpp: Grid evaluation of the LDOS, serial reference and OpenMP

#pragma once

#include <string>
#include <vector>

#include "nanogp/ldos.hpp"
#include "nanogp/system.hpp"

namespace nanogp::sweep {

// One frequency and the atom distances evaluated at it; the medium radial integrals are
// shared along the row.
struct Row {
    material::PermittivityModel model;
    double radius{0.0};
    double omega{0.0};
    std::vector<double> distances;
    bool need_medium{true};
};

struct PointOutcome {
    ldos::LdosResult ldos;
    bool ok{false};
    bool convergence_failure{false};
    std::string error;
};

struct EvalSettings {
    mie::SeriesControl series;
    specfun::QuadratureSpec quad;
};

// outcomes[i][k] belongs to rows[i].distances[k].
using Outcomes = std::vector<std::vector<PointOutcome>>;

std::vector<PointOutcome> evaluate_row(const Row& row, const EvalSettings& settings);

Outcomes evaluate_serial(const std::vector<Row>& rows, const EvalSettings& settings);
Outcomes evaluate_parallel(const std::vector<Row>& rows, const EvalSettings& settings, int jobs);

} // namespace nanogp::sweep
