// runner.cpp: Preset sweeps, tables and output files

#include "nanogp/sweep/runner.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "nanogp/constants.hpp"
#include "nanogp/errors.hpp"
#include "nanogp/gp.hpp"
#include "nanogp/qdynamics.hpp"
#include "nanogp/sweep/kernels.hpp"
#include "nanogp/thermal.hpp"

namespace nanogp::sweep {

namespace {

constexpr double pi = std::numbers::pi;

std::string short_number(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string theta_label(double theta) {
    for (int m = 1; m <= 12; ++m) {
        const long k = std::lround(theta * m / pi);
        if (std::abs(k * pi / m - theta) < 1e-12) {
            if (k == 0) {
                return "0";
            }
            std::string s = k == 1 ? "pi" : std::to_string(k) + "*pi";
            return m == 1 ? s : s + "/" + std::to_string(m);
        }
    }
    return short_number(theta);
}

std::string pair_label(const ThermalState& t) {
    return "T0=" + short_number(t.T0) + "K;T1=" + short_number(t.T1) + "K";
}

std::string table_name(const SweepConfig& cfg) {
    if (!cfg.preset.empty()) {
        return cfg.preset;
    }
    switch (cfg.kind) {
    case Kind::medium_theta: return "medium_theta";
    case Kind::medium_damping: return "medium_damping";
    case Kind::neff: return "neff";
    case Kind::outeq_omega: return "outeq_omega";
    case Kind::outeq_distance: return "outeq_distance";
    case Kind::total: return "total";
    case Kind::density: return "density";
    }
    return "sweep";
}

bool needs_medium(const SweepConfig& cfg) {
    switch (cfg.kind) {
    case Kind::medium_theta:
    case Kind::medium_damping:
        if (!cfg.exact_columns) {
            return false;
        }
        for (const auto& t : cfg.temperatures) {
            if (t.T0 != t.T1) {
                return true;
            }
        }
        return false;
    default: return true;
    }
}

// Everything a column needs at one grid point.
struct Context {
    const SweepConfig& cfg;
    double omega{0.0};       // rad/s
    double x_omega{0.0};     // ω/ω_r
    double gamma0{0.0};      // Γ0(ω)
    double scale{0.0};       // ω/Γ0(ω_r)
    SphereSystem system;
};

Context context(const SweepConfig& cfg, const material::PermittivityModel& model, double x_omega,
                double distance) {
    Context c{cfg, 0.0, 0.0, 0.0, 0.0, {}};
    const double wr = cfg.model.omega_r;
    c.x_omega = x_omega;
    c.omega = x_omega * wr;
    c.gamma0 = cfg.gamma0_over_omega_r * wr * x_omega * x_omega * x_omega;
    c.scale = x_omega / cfg.gamma0_over_omega_r;
    c.system.material = model;
    c.system.radius = cfg.radius_m;
    c.system.atom_distance = distance;
    c.system.atom = {c.omega, c.gamma0, 0.0};
    return c;
}

ldos::LdosResult free_space(double omega) {
    ldos::LdosResult r;
    r.omega = omega;
    r.rho = ldos::rho_vacuum(omega);
    r.rho_v = r.rho;
    r.rho_normalized = 1.0;
    return r;
}

// Φ0 - Φ_exact with the full rates of one curve.
double exact_correction(const Context& c, double theta0, const ldos::LdosResult& rho,
                        const ThermalState& t) {
    const double n_eff = thermal::n_effective(rho, c.omega, t);
    const auto rates = qdynamics::transition_rates(rho, n_eff, c.gamma0);
    double Omega = c.omega;
    if (c.cfg.lamb_shift) {
        Omega += qdynamics::lamb_shift_scattering(c.system, c.omega, c.cfg.series);
    }
    return gp::gp_unitary(theta0) - gp::gp_exact(theta0, rates, Omega, c.cfg.quad);
}

struct Builder {
    const SweepConfig& cfg;
    int jobs;
    SweepOutput out;

    Outcomes grid(const material::PermittivityModel& model, const std::vector<double>& xs_omega,
                  const std::vector<double>& distances, bool medium) const {
        std::vector<Row> rows;
        for (double x : xs_omega) {
            rows.push_back({model, cfg.radius_m, x * cfg.model.omega_r, distances, medium});
        }
        const EvalSettings settings{cfg.series, cfg.quad};
        return jobs > 1 ? evaluate_parallel(rows, settings, jobs) : evaluate_serial(rows, settings);
    }

    void fail(const std::string& curve, double x, double y, const std::string& msg, bool conv) {
        out.errors.push_back({curve, x, y, msg, conv});
    }

    void add(CsvTable t, PlotStyle s) {
        out.tables.push_back(std::move(t));
        out.styles.push_back(std::move(s));
    }
};

std::vector<double> metres(const SweepConfig& cfg, const std::vector<double>& xs) {
    std::vector<double> d;
    for (double x : xs) {
        d.push_back(x * constants::c / cfg.model.omega_r);
    }
    return d;
}

// Rows over ω/ω_r at the configured atom distance, or over ω_r r/c at fixed ω.
template <class Columns>
void line_sweep(Builder& b, const std::vector<std::string>& curve_columns, bool extras, Columns columns) {
    const SweepConfig& cfg = b.cfg;
    const bool over_distance = cfg.kind == Kind::outeq_distance;
    const auto xs_omega = omega_grid(cfg);
    const auto xs_dist = distance_grid(cfg);
    const auto dists = metres(cfg, xs_dist);
    const bool medium = needs_medium(cfg);
    const Outcomes oc = b.grid(cfg.model, xs_omega, dists, medium);

    CsvTable t;
    t.name = table_name(cfg);
    t.columns.push_back(over_distance ? "omega_r_r_over_c" : "omega_over_omega_r");
    t.columns.insert(t.columns.end(), curve_columns.begin(), curve_columns.end());
    if (extras) {
        t.columns.push_back("rho_over_rho0");
        if (medium) {
            t.columns.push_back("rho_m_over_rho");
        }
    }
    for (std::size_t i = 0; i < xs_omega.size(); ++i) {
        for (std::size_t k = 0; k < dists.size(); ++k) {
            const double x = over_distance ? xs_dist[k] : xs_omega[i];
            const PointOutcome& p = oc[i][k];
            if (!p.ok) {
                b.fail(t.name, x, 0.0, p.error, p.convergence_failure);
                continue;
            }
            try {
                const Context c = context(cfg, cfg.model, xs_omega[i], dists[k]);
                std::vector<double> row{x};
                columns(c, p.ldos, row);
                if (extras) {
                    row.push_back(p.ldos.rho_normalized);
                    if (medium) {
                        row.push_back(p.ldos.rho_m / p.ldos.rho);
                    }
                }
                t.rows.push_back(std::move(row));
            } catch (const ConvergenceError& e) {
                b.fail(t.name, x, 0.0, e.what(), true);
            } catch (const RangeError& e) {
                b.fail(t.name, x, 0.0, e.what(), true);
            } catch (const Error& e) {
                b.fail(t.name, x, 0.0, e.what(), false);
            }
        }
    }
    PlotStyle s;
    s.x_label = over_distance ? "omega_r r / c" : "omega / omega_r";
    b.add(std::move(t), s);
}

std::string curve_suffix(const SweepConfig& cfg, double theta0, const ThermalState& t) {
    if (cfg.theta0.size() > 1) {
        return "[theta0=" + theta_label(theta0) + ";" + pair_label(t) + "]";
    }
    return "[" + pair_label(t) + "]";
}

void medium_theta(Builder& b) {
    const SweepConfig& cfg = b.cfg;
    std::vector<std::string> cols;
    for (double th : cfg.theta0) {
        cols.push_back("omega_dphi_m_over_gamma0_r[theta0=" + theta_label(th) + "]");
    }
    if (cfg.exact_columns) {
        for (double th : cfg.theta0) {
            cols.push_back("omega_dphi_exact_over_gamma0_r[theta0=" + theta_label(th) + ";" +
                           pair_label(cfg.temperatures.front()) + "]");
        }
    }
    line_sweep(b, cols, true, [&](const Context& c, const ldos::LdosResult& rho, std::vector<double>& row) {
        for (double th : cfg.theta0) {
            row.push_back(c.scale * gp::delta_phi_medium(th, rho, c.gamma0, c.omega));
        }
        if (cfg.exact_columns) {
            for (double th : cfg.theta0) {
                row.push_back(c.scale * exact_correction(c, th, rho, cfg.temperatures.front()));
            }
        }
    });
    b.out.styles.back().title = "Medium-induced geometric phase";
    b.out.styles.back().y_label = "omega dPhi_m / Gamma0(omega_r)";
}

void medium_damping(Builder& b) {
    const SweepConfig& cfg = b.cfg;
    const double th = cfg.theta0.front();
    const auto xs = omega_grid(cfg);
    const auto dist = metres(cfg, distance_grid(cfg));
    std::vector<Outcomes> per_gamma;
    for (double g : cfg.gamma_e_over_omega_r) {
        auto model = cfg.model;
        model.gamma_e = g * cfg.model.omega_r;
        per_gamma.push_back(b.grid(model, xs, dist, false));
    }
    CsvTable t;
    t.name = table_name(cfg);
    t.columns.push_back("omega_over_omega_r");
    for (double g : cfg.gamma_e_over_omega_r) {
        t.columns.push_back("omega_dphi_m_over_gamma0_r[gamma_e=" + short_number(g) + "*omega_r]");
    }
    t.columns.push_back("omega_dphi_m_over_gamma0_r[free_space]");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<double> row{xs[i]};
        bool ok = true;
        for (std::size_t g = 0; g < per_gamma.size(); ++g) {
            const PointOutcome& p = per_gamma[g][i][0];
            if (!p.ok) {
                b.fail(t.columns[g + 1], xs[i], 0.0, p.error, p.convergence_failure);
                ok = false;
                continue;
            }
            const Context c = context(cfg, cfg.model, xs[i], dist[0]);
            row.push_back(c.scale * gp::delta_phi_medium(th, p.ldos, c.gamma0, c.omega));
        }
        if (!ok) {
            continue;
        }
        const Context c = context(cfg, cfg.model, xs[i], dist[0]);
        row.push_back(c.scale * gp::delta_phi_medium(th, free_space(c.omega), c.gamma0, c.omega));
        t.rows.push_back(std::move(row));
    }
    PlotStyle s;
    s.title = "Medium-induced geometric phase vs damping";
    s.x_label = "omega / omega_r";
    s.y_label = "omega dPhi_m / Gamma0(omega_r)";
    b.add(std::move(t), s);
}

void neff(Builder& b) {
    const SweepConfig& cfg = b.cfg;
    std::set<double> temps;
    std::vector<std::string> cols;
    for (const auto& t : cfg.temperatures) {
        cols.push_back("n_eff[" + pair_label(t) + "]");
        temps.insert(t.T0);
        temps.insert(t.T1);
    }
    for (double T : temps) {
        cols.push_back("n[T=" + short_number(T) + "K]");
    }
    line_sweep(b, cols, true, [&](const Context& c, const ldos::LdosResult& rho, std::vector<double>& row) {
        for (const auto& t : cfg.temperatures) {
            row.push_back(thermal::n_effective(rho, c.omega, t));
        }
        for (double T : temps) {
            row.push_back(thermal::bose_einstein(c.omega, T));
        }
    });
    b.out.styles.back().title = "Effective occupation";
    b.out.styles.back().y_label = "n_eff";
}

void outeq(Builder& b) {
    const SweepConfig& cfg = b.cfg;
    std::vector<std::string> cols;
    for (double th : cfg.theta0) {
        for (const auto& t : cfg.temperatures) {
            cols.push_back("omega_dphi_outeq_over_gamma0_r" + curve_suffix(cfg, th, t));
        }
    }
    line_sweep(b, cols, true, [&](const Context& c, const ldos::LdosResult& rho, std::vector<double>& row) {
        for (double th : cfg.theta0) {
            for (const auto& t : cfg.temperatures) {
                const double n = thermal::n_effective(rho, c.omega, t);
                row.push_back(c.scale * gp::delta_phi_noneq(th, rho, n, c.gamma0, c.omega));
            }
        }
    });
    b.out.styles.back().title = "Thermal geometric phase correction";
    b.out.styles.back().y_label = "omega dPhi_out-eq / Gamma0(omega_r)";
}

void total(Builder& b) {
    const SweepConfig& cfg = b.cfg;
    const ThermalState ref{cfg.reference_temperature, cfg.reference_temperature};
    std::vector<std::string> cols;
    for (double th : cfg.theta0) {
        for (const auto& t : cfg.temperatures) {
            cols.push_back("omega_dphi_over_gamma0_r" + curve_suffix(cfg, th, t));
        }
        const std::string ref_label = "free_space;T0=" + short_number(ref.T0) + "K";
        cols.push_back("omega_dphi_over_gamma0_r[" +
                       (cfg.theta0.size() > 1 ? "theta0=" + theta_label(th) + ";" : std::string()) +
                       ref_label + "]");
    }
    if (cfg.exact_columns) {
        for (double th : cfg.theta0) {
            for (const auto& t : cfg.temperatures) {
                cols.push_back("omega_dphi_exact_over_gamma0_r" + curve_suffix(cfg, th, t));
            }
        }
    }
    line_sweep(b, cols, true, [&](const Context& c, const ldos::LdosResult& rho, std::vector<double>& row) {
        const auto fs = free_space(c.omega);
        for (double th : cfg.theta0) {
            for (const auto& t : cfg.temperatures) {
                const double n = thermal::n_effective(rho, c.omega, t);
                row.push_back(c.scale * gp::delta_phi_total(th, rho, n, c.gamma0, c.omega));
            }
            const double n_ref = thermal::bose_einstein(c.omega, ref.T0);
            row.push_back(c.scale * gp::delta_phi_total(th, fs, n_ref, c.gamma0, c.omega));
        }
        if (cfg.exact_columns) {
            for (double th : cfg.theta0) {
                for (const auto& t : cfg.temperatures) {
                    row.push_back(c.scale * exact_correction(c, th, rho, t));
                }
            }
        }
    });
    b.out.styles.back().title = "Total geometric phase correction";
    b.out.styles.back().y_label = "omega dPhi / Gamma0(omega_r)";
}

void density(Builder& b) {
    const SweepConfig& cfg = b.cfg;
    const double th = cfg.theta0.front();
    const ThermalState t = cfg.temperatures.front();
    const auto xs = omega_grid(cfg);
    const auto rs = distance_grid(cfg);
    const auto dist = metres(cfg, rs);
    const Outcomes oc = b.grid(cfg.model, xs, dist, true);
    CsvTable table;
    table.name = table_name(cfg);
    table.columns = {"omega_r_r_over_c", "omega_over_omega_r", "dphi[" + pair_label(t) + "]"};
    for (std::size_t k = 0; k < rs.size(); ++k) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const PointOutcome& p = oc[i][k];
            if (!p.ok) {
                b.fail(table.name, rs[k], xs[i], p.error, p.convergence_failure);
                continue;
            }
            try {
                const Context c = context(cfg, cfg.model, xs[i], dist[k]);
                const double n = thermal::n_effective(p.ldos, c.omega, t);
                table.rows.push_back({rs[k], xs[i], gp::delta_phi_total(th, p.ldos, n, c.gamma0, c.omega)});
            } catch (const Error& e) {
                b.fail(table.name, rs[k], xs[i], e.what(), false);
            }
        }
    }
    PlotStyle s;
    s.kind = PlotKind::density;
    s.title = "Geometric phase correction, " + pair_label(t);
    s.x_label = "omega_r r / c";
    s.y_label = "omega / omega_r";
    s.z_label = "dPhi (rad)";
    b.add(std::move(table), s);
}

std::string quoted(const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
        q += ch == '"' ? std::string("\"\"") : std::string(1, ch == '\n' ? ' ' : ch);
    }
    return q + "\"";
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
    if (!f) {
        throw DataError("cannot write " + p.string());
    }
}

} // namespace

SweepOutput run_sweep(const SweepConfig& cfg, int jobs) {
    validate(cfg);
    Builder b{cfg, jobs, {}};
    switch (cfg.kind) {
    case Kind::medium_theta: medium_theta(b); break;
    case Kind::medium_damping: medium_damping(b); break;
    case Kind::neff: neff(b); break;
    case Kind::outeq_omega:
    case Kind::outeq_distance: outeq(b); break;
    case Kind::total: total(b); break;
    case Kind::density: density(b); break;
    }
    return std::move(b.out);
}

RunSummary run_to_directory(const SweepConfig& cfg, const std::filesystem::path& out, int jobs,
                            bool svg) {
    validate(cfg);
    const SweepOutput result = run_sweep(cfg, jobs);
    std::filesystem::create_directories(out);
    RunSummary summary;
    const auto emit = [&](const std::string& name, const std::string& text) {
        write_file(out / name, text);
        summary.files.push_back(out / name);
    };
    emit("resolved-config.txt", resolved_config(cfg));
    for (std::size_t i = 0; i < result.tables.size(); ++i) {
        const CsvTable& t = result.tables[i];
        emit(t.name + ".csv", to_csv(t));
        if (svg) {
            emit(t.name + ".svg", emit_svg(t, result.styles[i]));
        }
    }
    std::string errors = "curve,x,y,kind,message\n";
    for (const PointError& e : result.errors) {
        errors += quoted(e.curve) + "," + format_double(e.x) + "," + format_double(e.y) + "," +
                  (e.convergence ? "convergence" : "error") + "," + quoted(e.message) + "\n";
        summary.convergence_failure = summary.convergence_failure || e.convergence;
    }
    emit("errors.csv", errors);
    summary.point_errors = result.errors.size();
    return summary;
}

} // namespace nanogp::sweep
