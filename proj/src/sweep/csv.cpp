// csv.cpp: Deterministic CSV tables

#include <charconv>
#include <cmath>
#include <sstream>

#include "nanogp/errors.hpp"
#include "nanogp/sweep/table.hpp"

namespace nanogp::sweep {

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

std::string to_csv(const CsvTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out += (i ? "," : "") + t.columns[i];
    }
    out += '\n';
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.size() != t.columns.size()) {
            throw DataError("to_csv: row " + std::to_string(r) + " of '" + t.name + "' has " +
                            std::to_string(row.size()) + " values for " +
                            std::to_string(t.columns.size()) + " columns");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!std::isfinite(row[i])) {
                throw DataError("to_csv: non-finite value in '" + t.name + "'");
            }
            out += (i ? "," : "") + format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

CsvTable parse_csv(const std::string& text, const std::string& name) {
    CsvTable t;
    t.name = name;
    std::istringstream in(text);
    std::string line;
    const auto fields = [](const std::string& s) {
        std::vector<std::string> f;
        std::string item;
        std::istringstream ls(s);
        while (std::getline(ls, item, ',')) {
            f.push_back(item);
        }
        return f;
    };
    if (!std::getline(in, line)) {
        throw DataError("parse_csv: empty input");
    }
    t.columns = fields(line);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        for (const auto& f : fields(line)) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || ptr != f.data() + f.size()) {
                throw DataError("parse_csv: bad value '" + f + "'");
            }
            row.push_back(v);
        }
        if (row.size() != t.columns.size()) {
            throw DataError("parse_csv: ragged row");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace nanogp::sweep
