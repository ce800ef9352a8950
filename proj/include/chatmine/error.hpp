#pragma once

#include <stdexcept>
#include <string>

namespace chatmine {

// Bad user input: malformed config files, invalid flag combinations,
// unusable lexicons. The CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// The input stream itself cannot be read. Per-session schema violations are
// never fatal; they are reported as skips in the parse report instead.
struct IngestError : std::runtime_error {
    explicit IngestError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure while fitting a model (non-finite loss etc).
struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace chatmine
