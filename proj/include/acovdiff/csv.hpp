#pragma once

#include <string>
#include <vector>

namespace acovdiff::csv {

/// Formats with 17 significant digits, enough to round-trip a double.
std::string format_full(double value);

/// Fixed 4-decimal display format used in rendered tables.
std::string format_display(double value);

/// Reads a numeric series from a CSV file. Lines starting with '#' are
/// skipped. If the first data line is non-numeric it is treated as a
/// header; `column` then selects by name (empty means: the only column,
/// or an error when the file has several). Throws std::invalid_argument
/// on unreadable, empty or non-numeric input.
std::vector<double> read_series(const std::string& path, const std::string& column = "");

std::vector<std::string> split_row(const std::string& line);

}  // namespace acovdiff::csv
