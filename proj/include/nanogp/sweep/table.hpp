// table.hpp: CSV tables and SVG rendering

#pragma once

#include <string>
#include <vector>

namespace nanogp::sweep {

struct CsvTable {
    std::string name;  // file stem
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Header line plus one line per row, values at 17 significant digits.
// DataError on a ragged row or a non-finite value.
std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text, const std::string& name = {});

std::string format_double(double v);

enum class PlotKind { lines, density };

struct PlotStyle {
    PlotKind kind{PlotKind::lines};
    std::string title;
    std::string x_label;
    std::string y_label;
    std::string z_label;  // density colour bar
};

// Lines: column 0 is x, every other column one polyline. Density: columns (x, y, z).
std::string emit_svg(const CsvTable& table, const PlotStyle& style);

} // namespace nanogp::sweep
