#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace chatmine {

// Milliseconds since the Unix epoch, UTC.
using TimeMs = std::int64_t;

// Accepts RFC 3339 timestamps: "YYYY-MM-DDThh:mm:ss[.frac](Z|+hh:mm|-hh:mm)".
// Fractional seconds beyond milliseconds are truncated.
std::optional<TimeMs> parse_rfc3339(const std::string& s);

// Always renders UTC with millisecond precision: "2014-03-01T12:00:00.000Z".
std::string format_rfc3339(TimeMs t);

} // namespace chatmine
