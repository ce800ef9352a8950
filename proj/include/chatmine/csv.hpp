#pragma once

#include <string>

namespace chatmine {

// Shortest round-trip decimal rendering (std::to_chars); deterministic and
// locale-independent.
std::string format_double(double v);

// RFC 4180 quoting, applied only when the field needs it.
std::string csv_escape(const std::string& field);

} // namespace chatmine
