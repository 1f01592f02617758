// svg.cpp: Self-contained SVG line and density plots

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "nanogp/errors.hpp"
#include "nanogp/sweep/table.hpp"

namespace nanogp::sweep {

namespace {

constexpr double width = 820.0;
constexpr double height = 520.0;
constexpr double left = 90.0;
constexpr double right = 230.0;
constexpr double top = 50.0;
constexpr double bottom = 70.0;
constexpr double plot_w = width - left - right;
constexpr double plot_h = height - top - bottom;

const std::array<const char*, 8> palette{"#d62728", "#1f77b4", "#2ca02c", "#8c564b",
                                         "#000000", "#9467bd", "#ff7f0e", "#17becf"};
const std::array<const char*, 8> dashes{"", "8,4", "2,3", "8,3,2,3", "1,4", "12,4", "4,4", "6,2"};

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

struct Range {
    double lo;
    double hi;
};

Range padded(double lo, double hi) {
    if (!(hi > lo)) {
        const double d = lo == 0.0 ? 1.0 : 0.5 * std::abs(lo);
        return {lo - d, hi + d};
    }
    return {lo, hi};
}

std::vector<double> ticks(Range r) {
    const double span = r.hi - r.lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> t;
    for (double v = std::ceil(r.lo / step) * step; v <= r.hi + 1e-9 * span; v += step) {
        t.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
    }
    return t;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double px(double x, Range r) {
    return left + (x - r.lo) / (r.hi - r.lo) * plot_w;
}

double py(double y, Range r) {
    return top + plot_h - (y - r.lo) / (r.hi - r.lo) * plot_h;
}

std::string header(const PlotStyle& s, Range xr, Range yr) {
    std::string o;
    o += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(width, 0) + "\" height=\"" +
         fixed(height, 0) + "\" viewBox=\"0 0 " + fixed(width, 0) + " " + fixed(height, 0) + "\"";
    o += " data-xmin=\"" + format_double(xr.lo) + "\" data-xmax=\"" + format_double(xr.hi) + "\"";
    o += " data-ymin=\"" + format_double(yr.lo) + "\" data-ymax=\"" + format_double(yr.hi) + "\"";
    o += " data-plot-left=\"" + fixed(left, 0) + "\" data-plot-top=\"" + fixed(top, 0) +
         "\" data-plot-width=\"" + fixed(plot_w, 0) + "\" data-plot-height=\"" + fixed(plot_h, 0) + "\">\n";
    o += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o += "<text x=\"" + fixed(left + plot_w / 2, 1) + "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         escape(s.title) + "</text>\n";
    return o;
}

std::string axes(const PlotStyle& s, Range xr, Range yr) {
    std::string o;
    o += "<g class=\"axes\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o += "<rect x=\"" + fixed(left, 1) + "\" y=\"" + fixed(top, 1) + "\" width=\"" + fixed(plot_w, 1) +
         "\" height=\"" + fixed(plot_h, 1) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : ticks(xr)) {
        const double x = px(t, xr);
        o += "<line x1=\"" + fixed(x, 2) + "\" y1=\"" + fixed(top + plot_h, 2) + "\" x2=\"" + fixed(x, 2) +
             "\" y2=\"" + fixed(top + plot_h + 5, 2) + "\" stroke=\"black\"/>\n";
        o += "<text x=\"" + fixed(x, 2) + "\" y=\"" + fixed(top + plot_h + 20, 2) +
             "\" text-anchor=\"middle\">" + tick_label(t) + "</text>\n";
    }
    for (double t : ticks(yr)) {
        const double y = py(t, yr);
        o += "<line x1=\"" + fixed(left - 5, 2) + "\" y1=\"" + fixed(y, 2) + "\" x2=\"" + fixed(left, 2) +
             "\" y2=\"" + fixed(y, 2) + "\" stroke=\"black\"/>\n";
        o += "<text x=\"" + fixed(left - 8, 2) + "\" y=\"" + fixed(y + 4, 2) +
             "\" text-anchor=\"end\">" + tick_label(t) + "</text>\n";
    }
    o += "<text x=\"" + fixed(left + plot_w / 2, 1) + "\" y=\"" + fixed(height - 20, 1) +
         "\" text-anchor=\"middle\" font-size=\"14\">" + escape(s.x_label) + "</text>\n";
    o += "<text x=\"20\" y=\"" + fixed(top + plot_h / 2, 1) + "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 " +
         fixed(top + plot_h / 2, 1) + ")\">" + escape(s.y_label) + "</text>\n";
    o += "</g>\n";
    return o;
}

std::string lines(const CsvTable& t, const PlotStyle& s) {
    if (t.columns.size() < 2) {
        throw DataError("emit_svg: a line plot needs an x column and at least one curve");
    }
    double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
    for (const auto& row : t.rows) {
        xlo = std::min(xlo, row[0]);
        xhi = std::max(xhi, row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            ylo = std::min(ylo, row[c]);
            yhi = std::max(yhi, row[c]);
        }
    }
    if (t.rows.empty()) {
        xlo = ylo = 0.0;
        xhi = yhi = 1.0;
    }
    const Range xr = padded(xlo, xhi);
    const Range yr = padded(ylo, yhi);
    std::string o = header(s, xr, yr) + axes(s, xr, yr);
    o += "<g class=\"curves\" fill=\"none\" stroke-width=\"2\">\n";
    for (std::size_t c = 1; c < t.columns.size(); ++c) {
        const char* colour = palette[(c - 1) % palette.size()];
        const char* dash = dashes[(c - 1) % dashes.size()];
        const std::string label = escape(t.columns[c]);
        if (t.rows.size() == 1) {
            o += "<circle class=\"marker\" data-label=\"" + label + "\" cx=\"" + fixed(px(t.rows[0][0], xr)) +
                 "\" cy=\"" + fixed(py(t.rows[0][c], yr)) + "\" r=\"4\" fill=\"" + colour + "\"/>\n";
            continue;
        }
        o += "<polyline class=\"series\" data-label=\"" + label + "\" stroke=\"" + colour + "\"";
        if (*dash) {
            o += std::string(" stroke-dasharray=\"") + dash + "\"";
        }
        o += " points=\"";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            o += (r ? " " : "") + fixed(px(t.rows[r][0], xr)) + "," + fixed(py(t.rows[r][c], yr));
        }
        o += "\"/>\n";
    }
    o += "</g>\n<g class=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (std::size_t c = 1; c < t.columns.size(); ++c) {
        const double y = top + 10 + 20.0 * (c - 1);
        const double x = left + plot_w + 12;
        o += "<line x1=\"" + fixed(x, 1) + "\" y1=\"" + fixed(y, 1) + "\" x2=\"" + fixed(x + 24, 1) + "\" y2=\"" +
             fixed(y, 1) + "\" stroke=\"" + palette[(c - 1) % palette.size()] + "\" stroke-width=\"2\"";
        if (*dashes[(c - 1) % dashes.size()]) {
            o += std::string(" stroke-dasharray=\"") + dashes[(c - 1) % dashes.size()] + "\"";
        }
        o += "/>\n<text class=\"legend-entry\" x=\"" + fixed(x + 30, 1) + "\" y=\"" + fixed(y + 4, 1) + "\">" +
             escape(t.columns[c]) + "</text>\n";
    }
    o += "</g>\n</svg>\n";
    return o;
}

std::string colour(double f) {
    // viridis, five stops
    static const std::array<std::array<double, 3>, 5> stops{{{68, 1, 84}, {59, 82, 139}, {33, 145, 140},
                                                             {94, 201, 98}, {253, 231, 37}}};
    f = std::clamp(f, 0.0, 1.0) * 4.0;
    const int i = std::min(3, static_cast<int>(f));
    const double w = f - i;
    char buf[16];
    const auto mix = [&](int k) { return static_cast<int>(std::lround(stops[i][k] * (1 - w) + stops[i + 1][k] * w)); };
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", mix(0), mix(1), mix(2));
    return buf;
}

// Cell boundaries around sorted distinct centres.
std::vector<double> edges(const std::vector<double>& c) {
    std::vector<double> e(c.size() + 1);
    if (c.size() == 1) {
        const double d = c[0] == 0.0 ? 0.5 : 0.05 * std::abs(c[0]);
        return {c[0] - d, c[0] + d};
    }
    for (std::size_t i = 1; i < c.size(); ++i) {
        e[i] = 0.5 * (c[i - 1] + c[i]);
    }
    e.front() = c.front() - (e[1] - c.front());
    e.back() = c.back() + (c.back() - e[c.size() - 1]);
    return e;
}

std::string density(const CsvTable& t, const PlotStyle& s) {
    if (t.columns.size() != 3) {
        throw DataError("emit_svg: a density plot needs columns (x, y, z)");
    }
    std::set<double> xs_set, ys_set;
    double zlo = INFINITY, zhi = -INFINITY;
    for (const auto& row : t.rows) {
        xs_set.insert(row[0]);
        ys_set.insert(row[1]);
        zlo = std::min(zlo, row[2]);
        zhi = std::max(zhi, row[2]);
    }
    if (t.rows.empty()) {
        xs_set = {0.0};
        ys_set = {0.0};
        zlo = 0.0;
        zhi = 1.0;
    }
    const std::vector<double> xs(xs_set.begin(), xs_set.end());
    const std::vector<double> ys(ys_set.begin(), ys_set.end());
    const auto xe = edges(xs);
    const auto ye = edges(ys);
    const Range xr{xe.front(), xe.back()};
    const Range yr{ye.front(), ye.back()};
    const Range zr = padded(zlo, zhi);
    std::string o = header(s, xr, yr);
    o += "<g class=\"cells\" shape-rendering=\"crispEdges\">\n";
    for (const auto& row : t.rows) {
        const auto i = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), row[0]) - xs.begin());
        const auto j = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), row[1]) - ys.begin());
        const double x0 = px(xe[i], xr), x1 = px(xe[i + 1], xr);
        const double y0 = py(ye[j + 1], yr), y1 = py(ye[j], yr);
        o += "<rect class=\"cell\" data-x=\"" + format_double(row[0]) + "\" data-y=\"" + format_double(row[1]) +
             "\" data-z=\"" + format_double(row[2]) + "\" x=\"" + fixed(x0, 3) + "\" y=\"" + fixed(y0, 3) +
             "\" width=\"" + fixed(x1 - x0, 3) + "\" height=\"" + fixed(y1 - y0, 3) + "\" fill=\"" +
             colour((row[2] - zr.lo) / (zr.hi - zr.lo)) + "\"/>\n";
    }
    o += "</g>\n";
    o += axes(s, xr, yr);
    const double bx = left + plot_w + 30;
    o += "<g class=\"colorbar\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int k = 0; k < 50; ++k) {
        const double y = top + plot_h - (k + 1) * plot_h / 50.0;
        o += "<rect x=\"" + fixed(bx, 1) + "\" y=\"" + fixed(y, 3) + "\" width=\"20\" height=\"" +
             fixed(plot_h / 50.0 + 0.5, 3) + "\" fill=\"" + colour((k + 0.5) / 50.0) + "\"/>\n";
    }
    o += "<text x=\"" + fixed(bx + 26, 1) + "\" y=\"" + fixed(top + plot_h, 1) + "\">" + tick_label(zr.lo) + "</text>\n";
    o += "<text x=\"" + fixed(bx + 26, 1) + "\" y=\"" + fixed(top + 10, 1) + "\">" + tick_label(zr.hi) + "</text>\n";
    o += "<text x=\"" + fixed(bx, 1) + "\" y=\"" + fixed(top - 10, 1) + "\">" + escape(s.z_label) + "</text>\n";
    o += "</g>\n</svg>\n";
    return o;
}

} // namespace

std::string emit_svg(const CsvTable& table, const PlotStyle& style) {
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw DataError("emit_svg: ragged table '" + table.name + "'");
        }
    }
    return style.kind == PlotKind::density ? density(table, style) : lines(table, style);
}

} // namespace nanogp::sweep
