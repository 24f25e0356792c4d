#pragma once

#include <string>

namespace iva {

// Shortest decimal representation that round-trips the exact double.
// Locale-independent, '.' decimal point.
std::string fmt_double(double v);

// Parses a double previously written by fmt_double (or any strtod-style
// literal). Returns false on trailing garbage or range errors.
bool parse_double(const std::string& text, double& out);

} // namespace iva
