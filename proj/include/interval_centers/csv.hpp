#ifndef INTERVAL_CENTERS_CSV_HPP
#define INTERVAL_CENTERS_CSV_HPP

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "interval_centers/hypercube.hpp"

// Dataset file format: a comma-separated header naming variables as paired
// <name>_lo,<name>_hi columns, optionally preceded by an id column, then one
// row of finite reals per observation.

namespace interval_centers {

class MalformedHeader : public std::runtime_error {
public:
    explicit MalformedHeader(const std::string& what)
        : std::runtime_error("malformed header: " + what) {}
};

class RowError : public std::runtime_error {
public:
    RowError(std::size_t row, const std::string& what)
        : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

/// A parsed dataset plus the optional id column.
struct ParsedDataset {
    HypercubeDataset dataset;
    std::vector<std::string> ids;  // empty when the file has no id column
    bool has_id = false;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline double parse_real(const std::string& field, std::size_t row) {
    const char* begin = field.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw RowError(row, "not a number: '" + field + "'");
    if (!std::isfinite(v)) throw RowError(row, "non-finite value: '" + field + "'");
    return v;
}

inline std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace detail

inline ParsedDataset parse_csv_stream(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw MalformedHeader("empty input");
    auto header = detail::split_csv_line(detail::strip_cr(line));
    if (header.empty()) throw MalformedHeader("empty header");

    std::size_t col = 0;
    bool has_id = header[0] == "id";
    if (has_id) col = 1;

    // Variables are adjacent <name>_lo,<name>_hi pairs.
    std::vector<std::string> names;
    for (; col < header.size(); col += 2) {
        const std::string& lo = header[col];
        if (!detail::ends_with(lo, "_lo"))
            throw MalformedHeader("expected a <name>_lo column, got '" + lo + "'");
        std::string name = lo.substr(0, lo.size() - 3);
        if (col + 1 >= header.size() || header[col + 1] != name + "_hi")
            throw MalformedHeader("column '" + lo + "' has no matching '" + name + "_hi'");
        names.push_back(std::move(name));
    }
    if (names.empty()) throw MalformedHeader("no variable columns");

    std::vector<Hypercube> items;
    std::vector<std::string> ids;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        line = detail::strip_cr(line);
        if (line.empty()) continue;
        ++row;
        auto fields = detail::split_csv_line(line);
        if (fields.size() != header.size())
            throw RowError(row, "expected " + std::to_string(header.size()) + " fields, got " +
                                    std::to_string(fields.size()));
        std::size_t f = 0;
        if (has_id) ids.push_back(fields[f++]);
        std::vector<Interval> comps;
        comps.reserve(names.size());
        for (std::size_t j = 0; j < names.size(); ++j) {
            double lo = detail::parse_real(fields[f++], row);
            double hi = detail::parse_real(fields[f++], row);
            if (lo > hi)
                throw RowError(row, "variable '" + names[j] + "' has lo > hi");
            comps.emplace_back(lo, hi);
        }
        items.emplace_back(std::move(comps));
    }
    if (items.empty()) throw RowError(0, "no data rows");
    return {HypercubeDataset(std::move(items), std::move(names)), std::move(ids), has_id};
}

inline ParsedDataset parse_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return parse_csv_stream(in);
}

inline HypercubeDataset parse_csv(std::istream& in) { return parse_csv_stream(in).dataset; }

inline void write_csv(std::ostream& out, const ParsedDataset& pd) {
    const auto& data = pd.dataset;
    if (pd.has_id) out << "id,";
    for (std::size_t j = 0; j < data.dim(); ++j) {
        if (j) out << ',';
        out << data.variable_names()[j] << "_lo," << data.variable_names()[j] << "_hi";
    }
    out << '\n';
    out.precision(17);
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (pd.has_id) out << pd.ids[i] << ',';
        for (std::size_t j = 0; j < data.dim(); ++j) {
            if (j) out << ',';
            out << data[i][j].lower() << ',' << data[i][j].upper();
        }
        out << '\n';
    }
}

}  // namespace interval_centers

#endif  // INTERVAL_CENTERS_CSV_HPP
