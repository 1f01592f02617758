// config.cpp: Flat key = value configuration files

#include "nanogp/sweep/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "nanogp/constants.hpp"
#include "nanogp/errors.hpp"
#include "nanogp/sweep/table.hpp"

namespace nanogp::sweep {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        out.push_back(trim(item));
    }
    return out;
}

struct Field {
    std::string key;
    int line;
};

[[noreturn]] void fail(const Field& f, const std::string& why) {
    throw ConfigError("line " + std::to_string(f.line) + ", " + f.key + ": " + why);
}

double plain_number(const std::string& s, const Field& f) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || s.empty()) {
        fail(f, "'" + s + "' is not a number");
    }
    return v;
}

// "1.5", "pi", "pi/6", "5*pi/6", "0.25pi"
double number(const std::string& raw, const Field& f) {
    std::string s;
    for (char ch : lower(raw)) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    const auto p = s.find("pi");
    if (p == std::string::npos) {
        return plain_number(s, f);
    }
    std::string head = s.substr(0, p);
    const std::string tail = s.substr(p + 2);
    if (!head.empty() && head.back() == '*') {
        head.pop_back();
    }
    double v = (head.empty() ? 1.0 : plain_number(head, f)) * std::numbers::pi;
    if (!tail.empty()) {
        if (tail[0] != '/') {
            fail(f, "'" + raw + "' is not a number");
        }
        v /= plain_number(tail.substr(1), f);
    }
    return v;
}

int integer(const std::string& s, const Field& f) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        fail(f, "'" + s + "' is not an integer");
    }
    return v;
}

bool boolean(const std::string& s, const Field& f) {
    const auto v = lower(s);
    if (v == "true" || v == "on" || v == "yes" || v == "1") {
        return true;
    }
    if (v == "false" || v == "off" || v == "no" || v == "0") {
        return false;
    }
    fail(f, "'" + s + "' is not a boolean");
}

std::vector<double> number_list(const std::string& s, const Field& f) {
    std::vector<double> out;
    if (trim(s).empty()) {
        return out;
    }
    for (const auto& item : split(s, ',')) {
        out.push_back(number(item, f));
    }
    return out;
}

std::vector<ThermalState> pairs(const std::string& s, const Field& f) {
    std::vector<ThermalState> out;
    if (trim(s).empty()) {
        return out;
    }
    for (const auto& item : split(s, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) {
            fail(f, "expected T0:T1 pairs, got '" + item + "'");
        }
        out.push_back({number(parts[0], f), number(parts[1], f)});
    }
    return out;
}

using Setter = std::function<void(SweepConfig&, const std::string&, const Field&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table{
        {"preset", [](SweepConfig&, const std::string&, const Field&) {}},
        {"material", [](SweepConfig&, const std::string&, const Field&) {}},
        {"eps_inf", [](SweepConfig& c, const std::string& v, const Field& f) { c.model.eps_inf = number(v, f); }},
        {"omega_l_rad_s", [](SweepConfig& c, const std::string& v, const Field& f) { c.model.omega_l = number(v, f); }},
        {"omega_r_rad_s", [](SweepConfig& c, const std::string& v, const Field& f) { c.model.omega_r = number(v, f); }},
        {"gamma_e_rad_s", [](SweepConfig& c, const std::string& v, const Field& f) { c.model.gamma_e = number(v, f); }},
        {"radius_m", [](SweepConfig& c, const std::string& v, const Field& f) { c.radius_m = number(v, f); }},
        {"atom_distance_m", [](SweepConfig& c, const std::string& v, const Field& f) { c.atom_distance_m = number(v, f); }},
        {"omega_min_over_omega_r", [](SweepConfig& c, const std::string& v, const Field& f) { c.omega_min = number(v, f); }},
        {"omega_max_over_omega_r", [](SweepConfig& c, const std::string& v, const Field& f) { c.omega_max = number(v, f); }},
        {"omega_points", [](SweepConfig& c, const std::string& v, const Field& f) { c.omega_points = integer(v, f); }},
        {"fixed_omega_over_omega_r", [](SweepConfig& c, const std::string& v, const Field& f) { c.fixed_omega = number(v, f); }},
        {"distance_min_c_over_omega_r", [](SweepConfig& c, const std::string& v, const Field& f) { c.distance_min = number(v, f); }},
        {"distance_max_c_over_omega_r", [](SweepConfig& c, const std::string& v, const Field& f) { c.distance_max = number(v, f); }},
        {"distance_points", [](SweepConfig& c, const std::string& v, const Field& f) { c.distance_points = integer(v, f); }},
        {"distance_spacing", [](SweepConfig& c, const std::string& v, const Field& f) {
             const auto s = lower(v);
             if (s != "log" && s != "linear") {
                 fail(f, "expected 'log' or 'linear'");
             }
             c.distance_log = s == "log";
         }},
        {"gamma0_over_omega_r", [](SweepConfig& c, const std::string& v, const Field& f) { c.gamma0_over_omega_r = number(v, f); }},
        {"theta0_rad", [](SweepConfig& c, const std::string& v, const Field& f) { c.theta0 = number_list(v, f); }},
        {"temperature_pairs_K", [](SweepConfig& c, const std::string& v, const Field& f) { c.temperatures = pairs(v, f); }},
        {"gamma_e_over_omega_r_list", [](SweepConfig& c, const std::string& v, const Field& f) { c.gamma_e_over_omega_r = number_list(v, f); }},
        {"reference_temperature_K", [](SweepConfig& c, const std::string& v, const Field& f) { c.reference_temperature = number(v, f); }},
        {"exact_columns", [](SweepConfig& c, const std::string& v, const Field& f) { c.exact_columns = boolean(v, f); }},
        {"lamb_shift", [](SweepConfig& c, const std::string& v, const Field& f) { c.lamb_shift = boolean(v, f); }},
        {"series_n_max", [](SweepConfig& c, const std::string& v, const Field& f) { c.series.n_max = integer(v, f); }},
        {"series_rel_tol", [](SweepConfig& c, const std::string& v, const Field& f) { c.series.rel_tol = number(v, f); }},
        {"series_hard_cap", [](SweepConfig& c, const std::string& v, const Field& f) { c.series.hard_cap = integer(v, f); }},
        {"quad_rel_tol", [](SweepConfig& c, const std::string& v, const Field& f) { c.quad.rel_tol = number(v, f); }},
        {"quad_abs_tol", [](SweepConfig& c, const std::string& v, const Field& f) { c.quad.abs_tol = number(v, f); }},
        {"quad_max_subdivisions", [](SweepConfig& c, const std::string& v, const Field& f) { c.quad.max_subdivisions = integer(v, f); }},
    };
    return table;
}

struct Entry {
    std::string value;
    int line;
};

std::map<std::string, Entry> entries(const std::string& text) {
    std::map<std::string, Entry> out;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) {
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
        }
        const std::string key = trim(s.substr(0, eq));
        if (!setters().contains(key)) {
            throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
        if (out.contains(key)) {
            throw ConfigError("line " + std::to_string(line) + ": duplicate key '" + key + "'");
        }
        out[key] = {trim(s.substr(eq + 1)), line};
    }
    return out;
}

bool strictly_increasing(const std::vector<double>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + format_double(v[i]);
    }
    return s;
}

bool uses_distance_grid(Kind k) {
    return k == Kind::outeq_distance || k == Kind::density;
}

bool uses_temperatures(Kind k) {
    return k == Kind::neff || k == Kind::outeq_omega || k == Kind::outeq_distance ||
           k == Kind::total || k == Kind::density;
}

} // namespace

std::string preset_in(const std::string& text) {
    const auto e = entries(text);
    const auto it = e.find("preset");
    return it == e.end() ? std::string{} : it->second.value;
}

SweepConfig parse_config(const std::string& text, SweepConfig base) {
    const auto e = entries(text);
    if (const auto it = e.find("material"); it != e.end()) {
        try {
            base.model = material::named_model(it->second.value);
        } catch (const DomainError& err) {
            fail({"material", it->second.line}, err.what());
        }
        base.material_name = lower(it->second.value);
    }
    for (const auto& [key, entry] : e) {
        setters().at(key)(base, entry.value, {key, entry.line});
    }
    return base;
}

void validate(const SweepConfig& c) {
    try {
        material::validate(c.model);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("material: ") + e.what());
    }
    if (!(c.radius_m > 0.0) || !std::isfinite(c.radius_m)) {
        throw ConfigError("radius_m: must be finite and > 0");
    }
    if (!uses_distance_grid(c.kind) &&
        (!(c.atom_distance_m > c.radius_m) || !std::isfinite(c.atom_distance_m))) {
        throw ConfigError("atom_distance_m: must exceed radius_m");
    }
    if (c.kind != Kind::outeq_distance) {
        if (c.omega_points < 1) {
            throw ConfigError("omega_points: frequency grid is empty");
        }
        if (!(c.omega_min > 0.0) || !std::isfinite(c.omega_max)) {
            throw ConfigError("omega_min_over_omega_r: must be > 0");
        }
        if (c.omega_points > 1 && !(c.omega_max > c.omega_min)) {
            throw ConfigError("omega_max_over_omega_r: grid must be strictly increasing");
        }
        if (c.omega_points == 1 && c.omega_max != c.omega_min) {
            throw ConfigError("omega_points: a one-point grid needs omega_min = omega_max");
        }
    } else if (!(c.fixed_omega > 0.0) || !std::isfinite(c.fixed_omega)) {
        throw ConfigError("fixed_omega_over_omega_r: must be finite and > 0");
    }
    if (uses_distance_grid(c.kind)) {
        if (c.distance_points < 1) {
            throw ConfigError("distance_points: distance grid is empty");
        }
        if (c.distance_points > 1 && !(c.distance_max > c.distance_min)) {
            throw ConfigError("distance_max_c_over_omega_r: grid must be strictly increasing");
        }
        if (c.distance_points == 1 && c.distance_max != c.distance_min) {
            throw ConfigError("distance_points: a one-point grid needs distance_min = distance_max");
        }
        const double a_norm = c.radius_m * c.model.omega_r / constants::c;
        if (!(c.distance_min > a_norm) || !std::isfinite(c.distance_max)) {
            throw ConfigError("distance_min_c_over_omega_r: grid must lie outside the sphere (> " +
                              format_double(a_norm) + ")");
        }
    }
    if (!(c.gamma0_over_omega_r > 0.0 && c.gamma0_over_omega_r < 1.0)) {
        throw ConfigError("gamma0_over_omega_r: must lie in (0, 1)");
    }
    if (c.theta0.empty()) {
        throw ConfigError("theta0_rad: list is empty");
    }
    if (!strictly_increasing(c.theta0)) {
        throw ConfigError("theta0_rad: list must be strictly increasing");
    }
    for (double t : c.theta0) {
        if (!(t >= 0.0 && t <= std::numbers::pi)) {
            throw ConfigError("theta0_rad: values must lie in [0, pi]");
        }
    }
    if (uses_temperatures(c.kind)) {
        if (c.temperatures.empty()) {
            throw ConfigError("temperature_pairs_K: list is empty");
        }
        for (const auto& t : c.temperatures) {
            if (!(t.T0 >= 0.0 && t.T1 >= 0.0) || !std::isfinite(t.T0 + t.T1)) {
                throw ConfigError("temperature_pairs_K: temperatures must be finite and >= 0");
            }
        }
    }
    if (c.kind == Kind::density && (c.temperatures.size() != 1 || c.theta0.size() != 1)) {
        throw ConfigError("temperature_pairs_K: the density sweep takes one pair and one theta0");
    }
    if (c.kind == Kind::medium_damping) {
        if (c.gamma_e_over_omega_r.empty()) {
            throw ConfigError("gamma_e_over_omega_r_list: list is empty");
        }
        if (!strictly_increasing(c.gamma_e_over_omega_r) || !(c.gamma_e_over_omega_r[0] >= 0.0)) {
            throw ConfigError("gamma_e_over_omega_r_list: must be non-negative and strictly increasing");
        }
    }
    if (!(c.reference_temperature >= 0.0)) {
        throw ConfigError("reference_temperature_K: must be >= 0");
    }
    if (!(c.series.rel_tol > 0.0) || c.series.hard_cap < 1 || c.series.n_max < 0 ||
        c.series.n_max > c.series.hard_cap) {
        throw ConfigError("series_*: need rel_tol > 0 and 0 <= n_max <= hard_cap");
    }
    if (!(c.quad.rel_tol > 0.0) || c.quad.abs_tol < 0.0 || c.quad.max_subdivisions < 1) {
        throw ConfigError("quad_*: need rel_tol > 0, abs_tol >= 0, max_subdivisions >= 1");
    }
}

std::string resolved_config(const SweepConfig& c) {
    std::ostringstream o;
    const auto put = [&o](const std::string& k, const std::string& v) { o << k << " = " << v << '\n'; };
    const auto num = [](double v) { return format_double(v); };
    if (!c.preset.empty()) {
        put("preset", c.preset);
    }
    put("material", c.material_name);
    put("eps_inf", num(c.model.eps_inf));
    put("omega_l_rad_s", num(c.model.omega_l));
    put("omega_r_rad_s", num(c.model.omega_r));
    put("gamma_e_rad_s", num(c.model.gamma_e));
    put("radius_m", num(c.radius_m));
    put("atom_distance_m", num(c.atom_distance_m));
    put("omega_min_over_omega_r", num(c.omega_min));
    put("omega_max_over_omega_r", num(c.omega_max));
    put("omega_points", std::to_string(c.omega_points));
    put("fixed_omega_over_omega_r", num(c.fixed_omega));
    put("distance_min_c_over_omega_r", num(c.distance_min));
    put("distance_max_c_over_omega_r", num(c.distance_max));
    put("distance_points", std::to_string(c.distance_points));
    put("distance_spacing", c.distance_log ? "log" : "linear");
    put("gamma0_over_omega_r", num(c.gamma0_over_omega_r));
    put("theta0_rad", join(c.theta0));
    std::string t;
    for (std::size_t i = 0; i < c.temperatures.size(); ++i) {
        t += (i ? ", " : "") + num(c.temperatures[i].T0) + ":" + num(c.temperatures[i].T1);
    }
    put("temperature_pairs_K", t);
    put("gamma_e_over_omega_r_list", join(c.gamma_e_over_omega_r));
    put("reference_temperature_K", num(c.reference_temperature));
    put("exact_columns", c.exact_columns ? "true" : "false");
    put("lamb_shift", c.lamb_shift ? "true" : "false");
    put("series_n_max", std::to_string(c.series.n_max));
    put("series_rel_tol", num(c.series.rel_tol));
    put("series_hard_cap", std::to_string(c.series.hard_cap));
    put("quad_rel_tol", num(c.quad.rel_tol));
    put("quad_abs_tol", num(c.quad.abs_tol));
    put("quad_max_subdivisions", std::to_string(c.quad.max_subdivisions));
    return o.str();
}

std::vector<double> omega_grid(const SweepConfig& c) {
    if (c.kind == Kind::outeq_distance) {
        return {c.fixed_omega};
    }
    std::vector<double> g(c.omega_points);
    for (int k = 0; k < c.omega_points; ++k) {
        g[k] = c.omega_points == 1
                   ? c.omega_min
                   : c.omega_min + (c.omega_max - c.omega_min) * k / (c.omega_points - 1.0);
    }
    g.back() = c.omega_max;
    return g;
}

std::vector<double> distance_grid(const SweepConfig& c) {
    if (!uses_distance_grid(c.kind)) {
        return {c.atom_distance_m * c.model.omega_r / constants::c};
    }
    std::vector<double> g(c.distance_points);
    for (int k = 0; k < c.distance_points; ++k) {
        const double f = c.distance_points == 1 ? 0.0 : k / (c.distance_points - 1.0);
        g[k] = c.distance_log
                   ? std::exp(std::log(c.distance_min) + f * (std::log(c.distance_max) - std::log(c.distance_min)))
                   : c.distance_min + f * (c.distance_max - c.distance_min);
    }
    g.front() = c.distance_min;
    g.back() = c.distance_max;
    return g;
}

} // namespace nanogp::sweep
