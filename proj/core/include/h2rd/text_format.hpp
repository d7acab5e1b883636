#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace h2rd {

/// Shortest decimal representation that parses back to the same double.
std::string format_shortest(double v);
/// Fixed number of significant digits ("%.*g"), used for report tables.
std::string format_sig(double v, int digits = 10);
std::string format_fixed(double v, int decimals);

/// Strict parse of a whole field; false on trailing garbage or empty input.
bool parse_double(std::string_view text, double& out);
bool parse_int64(std::string_view text, long long& out);

std::string_view trim(std::string_view s);
/// Splits on `sep` without quote handling.
std::vector<std::string_view> split(std::string_view s, char sep);

}  // namespace h2rd
