// presets.cpp: Parameter sets of the figure presets

#include <numbers>

#include "nanogp/errors.hpp"
#include "nanogp/sweep/config.hpp"

namespace nanogp::sweep {

namespace {

constexpr double pi = std::numbers::pi;

const std::vector<ThermalState> four_pairs{{600.0, 100.0}, {100.0, 600.0}, {600.0, 600.0},
                                           {100.0, 100.0}};

SweepConfig base(const std::string& id, Kind kind) {
    SweepConfig c;
    c.preset = id;
    c.kind = kind;
    c.model = material::gaas_model();
    c.theta0 = {pi / 4.0};
    c.temperatures = {{0.0, 0.0}};
    return c;
}

} // namespace

std::vector<std::string> preset_names() {
    return {"fig2", "fig3", "fig4", "fig5a", "fig5b", "fig6", "figD"};
}

SweepConfig preset_config(const std::string& id) {
    if (id == "fig2") {
        auto c = base(id, Kind::medium_theta);
        c.theta0 = {pi / 6.0, pi / 4.0, pi / 2.0, 5.0 * pi / 6.0};
        return c;
    }
    if (id == "fig3") {
        auto c = base(id, Kind::medium_damping);
        c.gamma_e_over_omega_r = {0.00452, 0.0452, 0.452};
        return c;
    }
    if (id == "fig4") {
        auto c = base(id, Kind::neff);
        c.omega_points = 100;
        c.temperatures = four_pairs;
        return c;
    }
    if (id == "fig5a") {
        auto c = base(id, Kind::outeq_omega);
        c.temperatures = four_pairs;
        return c;
    }
    if (id == "fig5b") {
        auto c = base(id, Kind::outeq_distance);
        c.temperatures = four_pairs;
        c.fixed_omega = 1.074;
        c.distance_min = 0.125;
        c.distance_max = 5.0;
        c.distance_points = 60;
        c.distance_log = true;
        return c;
    }
    if (id == "fig6") {
        auto c = base(id, Kind::total);
        c.temperatures = four_pairs;
        c.reference_temperature = 100.0;
        return c;
    }
    if (id == "figD") {
        auto c = base(id, Kind::density);
        c.temperatures = {{600.0, 100.0}};
        c.omega_points = 61;
        c.distance_min = 0.125;
        c.distance_max = 1.5;
        c.distance_points = 45;
        c.distance_log = false;
        return c;
    }
    throw ConfigError("preset: unknown id '" + id + "'");
}

} // namespace nanogp::sweep
