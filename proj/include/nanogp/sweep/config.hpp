// config.hpp: Sweep configuration, flat key = value files and figure presets

#pragma once

#include <string>
#include <vector>

#include "nanogp/material.hpp"
#include "nanogp/mie_green.hpp"
#include "nanogp/quadrature.hpp"
#include "nanogp/system.hpp"

namespace nanogp::sweep {

enum class Kind {
    medium_theta,    // ΔΦ_m vs ω for several θ0
    medium_damping,  // ΔΦ_m vs ω for several γ_e, plus the free-space curve
    neff,            // n_eff vs ω for several temperature pairs
    outeq_omega,     // ΔΦ_out-eq vs ω
    outeq_distance,  // ΔΦ_out-eq vs ω_r r / c at fixed ω
    total,           // ΔΦ vs ω, plus the free-space curve at the lowest T0
    density,         // ΔΦ over (ω_r r / c, ω)
};

struct SweepConfig {
    std::string preset;
    Kind kind{Kind::medium_theta};

    std::string material_name{"gaas"};
    material::PermittivityModel model;

    double radius_m{700e-9};
    double atom_distance_m{1.7e-6};

    // frequency grid in units of ω_r
    double omega_min{0.9};
    double omega_max{1.2};
    int omega_points{200};
    double fixed_omega{1.074};  // outeq_distance

    // distance grid in units of c/ω_r
    double distance_min{0.125};
    double distance_max{5.0};
    int distance_points{60};
    bool distance_log{true};

    double gamma0_over_omega_r{1e-5};  // Γ0 at ω0 = ω_r, scaled as ω0³
    std::vector<double> theta0;
    std::vector<ThermalState> temperatures;
    std::vector<double> gamma_e_over_omega_r;  // medium_damping
    double reference_temperature{0.0};         // free-space curve of `total`

    bool exact_columns{false};  // add gp_exact-based columns
    bool lamb_shift{false};     // Ω = ω0 + Λ in the exact columns

    mie::SeriesControl series;
    specfun::QuadratureSpec quad;
};

std::vector<std::string> preset_names();

// ConfigError for an unknown id.
SweepConfig preset_config(const std::string& id);

// Applies `key = value` lines on top of `base`. Blank lines and text after '#' are
// ignored. Numbers accept a trailing "pi" factor form: "pi/6", "5*pi/6", "0.25pi".
// ConfigError names the line and key on any problem.
SweepConfig parse_config(const std::string& text, SweepConfig base);

// The preset named by a `preset = ...` line in `text`, or "" if there is none.
std::string preset_in(const std::string& text);

// ConfigError with a field-level message.
void validate(const SweepConfig& cfg);

// Every key with the value actually used, parseable by parse_config.
std::string resolved_config(const SweepConfig& cfg);

// Grids after validation.
std::vector<double> omega_grid(const SweepConfig& cfg);     // units of ω_r
std::vector<double> distance_grid(const SweepConfig& cfg);  // units of c/ω_r

} // namespace nanogp::sweep
