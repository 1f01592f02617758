// nanogp: sweep runner and resonance finder

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "nanogp/errors.hpp"
#include "nanogp/material.hpp"
#include "nanogp/sweep/runner.hpp"
#include "nanogp/sweep/table.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_convergence = 3;

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw nanogp::ConfigError("config: cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

nanogp::sweep::SweepConfig default_config() {
    nanogp::sweep::SweepConfig c;
    c.model = nanogp::material::gaas_model();
    c.theta0 = {std::numbers::pi / 4.0};
    c.temperatures = {{0.0, 0.0}};
    return c;
}

int run_sweep(const std::string& config_path, std::string preset, bool svg, const std::string& out,
              int jobs) {
    using namespace nanogp;
    try {
        if (config_path.empty() && preset.empty()) {
            throw ConfigError("sweep: give --config, --preset or both");
        }
        const std::string text = config_path.empty() ? std::string{} : read_file(config_path);
        const std::string in_file = sweep::preset_in(text);
        if (!preset.empty() && !in_file.empty() && in_file != preset) {
            throw ConfigError("preset: --preset " + preset + " conflicts with config value '" + in_file + "'");
        }
        if (preset.empty()) {
            preset = in_file;
        }
        const auto base = preset.empty() ? default_config() : sweep::preset_config(preset);
        const auto cfg = sweep::parse_config(text, base);
        sweep::validate(cfg);
        const auto summary = sweep::run_to_directory(cfg, out, jobs, svg);
        for (const auto& f : summary.files) {
            std::cout << f.string() << '\n';
        }
        if (summary.point_errors > 0) {
            std::cerr << "sweep: " << summary.point_errors << " grid point(s) failed, see "
                      << (std::filesystem::path(out) / "errors.csv").string() << '\n';
            return exit_convergence;
        }
        return exit_ok;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_convergence;
    }
}

int run_resonance(const std::string& name) {
    using namespace nanogp;
    material::PermittivityModel model;
    try {
        model = material::named_model(name);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
    try {
        const double w = material::lspp_resonance(model);
        std::cout << "material = " << name << '\n'
                  << "omega_lspp_rad_s = " << sweep::format_double(w) << '\n'
                  << "omega_lspp_over_omega_r = " << sweep::format_double(w / model.omega_r) << '\n';
        return exit_ok;
    } catch (const ResonanceNotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_convergence;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric phase of a two-level atom near a lossy nanosphere"};
    app.require_subcommand(1);

    std::string config_path;
    std::string preset;
    bool svg = false;
    std::string out = "out";
    int jobs = 1;
    auto* sweep = app.add_subcommand("sweep", "Evaluate a preset or configured sweep to CSV");
    sweep->add_option("--config", config_path, "key = value configuration file");
    sweep->add_option("--preset", preset, "Figure preset")
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5a", "fig5b", "fig6", "figD"}));
    sweep->add_flag("--svg", svg, "Also write SVG plots");
    sweep->add_option("--out", out, "Output directory");
    sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::string material_name;
    auto* resonance = app.add_subcommand("resonance", "Print the surface phonon-polariton frequency");
    resonance->add_option("--material", material_name, "Material name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }
    try {
        if (*sweep) {
            return run_sweep(config_path, preset, svg, out, jobs);
        }
        return run_resonance(material_name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
