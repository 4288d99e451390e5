#include "acovdiff/csv.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace acovdiff::csv {

std::string format_full(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string format_display(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string token;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(token);
            token.clear();
        } else if (c != '\r') {
            token.push_back(c);
        }
    }
    fields.push_back(token);
    for (auto& f : fields) {
        std::size_t a = 0, b = f.size();
        while (a < b && std::isspace(static_cast<unsigned char>(f[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(f[b - 1]))) --b;
        f = f.substr(a, b - a);
    }
    return fields;
}

namespace {

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    std::size_t used = 0;
    try {
        out = std::stod(text, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == text.size();
}

}  // namespace

std::vector<double> read_series(const std::string& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");

    std::vector<double> series;
    std::string line;
    bool saw_data_line = false;
    long field_index = -1;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        auto fields = split_row(line);
        if (!saw_data_line) {
            saw_data_line = true;
            double probe;
            const bool numeric_first = parse_double(fields.front(), probe);
            if (!numeric_first) {
                // Header row: resolve the column by name.
                if (column.empty()) {
                    if (fields.size() != 1) {
                        throw std::invalid_argument(
                            "'" + path + "' has several columns; pick one with --column");
                    }
                    field_index = 0;
                } else {
                    for (std::size_t i = 0; i < fields.size(); ++i) {
                        if (fields[i] == column) field_index = static_cast<long>(i);
                    }
                    if (field_index < 0) {
                        throw std::invalid_argument("'" + path + "' has no column named '" +
                                                    column + "'");
                    }
                }
                continue;
            }
            if (!column.empty()) {
                throw std::invalid_argument("'" + path +
                                            "' has no header row; --column needs named columns");
            }
            if (fields.size() != 1) {
                throw std::invalid_argument("'" + path +
                                            "' has several columns; pick one with --column");
            }
            field_index = 0;
        }
        if (field_index >= static_cast<long>(fields.size())) {
            throw std::invalid_argument("'" + path + "' line " + std::to_string(line_no) +
                                        " has too few fields");
        }
        double value;
        if (!parse_double(fields[static_cast<std::size_t>(field_index)], value)) {
            throw std::invalid_argument("'" + path + "' line " + std::to_string(line_no) +
                                        " is not numeric");
        }
        series.push_back(value);
    }
    if (series.empty()) throw std::invalid_argument("'" + path + "' contains no data");
    return series;
}

}  // namespace acovdiff::csv
