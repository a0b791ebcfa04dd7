#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtricycle {

/// Shortest decimal representation that round-trips the exact double
/// (std::to_chars), '.' decimal separator, locale independent.
std::string format_double(double value);

/// RFC 4180 quoting: fields containing commas, quotes or newlines are
/// quoted, embedded quotes doubled.
std::string csv_escape(const std::string& field);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace qtricycle
