// runner.hpp: Preset sweeps from configuration to files

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nanogp/sweep/config.hpp"
#include "nanogp/sweep/table.hpp"

namespace nanogp::sweep {

struct PointError {
    std::string curve;
    double x{0.0};  // ω/ω_r or ω_r r / c
    double y{0.0};  // second coordinate (density) or 0
    std::string message;
    bool convergence{false};
};

struct SweepOutput {
    std::vector<CsvTable> tables;
    std::vector<PlotStyle> styles;  // one per table
    std::vector<PointError> errors;
};

// jobs <= 1 uses the serial kernel.
SweepOutput run_sweep(const SweepConfig& cfg, int jobs);

struct RunSummary {
    std::vector<std::filesystem::path> files;
    std::size_t point_errors{0};
    bool convergence_failure{false};
};

// Validates, runs, then writes <name>.csv per table, resolved-config.txt, errors.csv and,
// with svg, <name>.svg. Nothing is written when validation fails.
RunSummary run_to_directory(const SweepConfig& cfg, const std::filesystem::path& out, int jobs,
                            bool svg);

} // namespace nanogp::sweep
