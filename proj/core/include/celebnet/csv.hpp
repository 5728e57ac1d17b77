#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace celebnet {

/// RFC 4180 quoting: fields containing comma, quote, CR or LF are wrapped
/// in double quotes with embedded quotes doubled.
std::string csv_escape(std::string_view field);

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

/// Splits one CSV line into fields, honoring RFC 4180 quoting.
std::vector<std::string> parse_csv_line(const std::string& line);

/// snprintf-backed double formatting with a stable, locale-free result.
std::string format_double(double value, const char* fmt = "%.10g");

} // namespace celebnet
