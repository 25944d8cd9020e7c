#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace csw {

std::vector<std::string> split_ws(std::string_view line);
std::vector<std::string> split_char(std::string_view line, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Whole file as lines; strips one trailing \r per line. Throws IoError.
std::vector<std::string> read_lines(const std::string& path);

// Shortest decimal form that round-trips; stable across runs.
std::string format_double(double v);
double parse_double(std::string_view s);  // throws FormatError
long parse_int(std::string_view s);       // throws FormatError

std::string ascii_lower(std::string_view s);

}  // namespace csw
