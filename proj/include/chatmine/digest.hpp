#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace chatmine {

std::uint64_t fnv1a64(const void* data, std::size_t len);

inline std::uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

// Throws IngestError when the file cannot be read.
std::uint64_t fnv1a64_file(const std::string& path);

// "fnv1a64:<16 hex digits>"
std::string digest_string(std::uint64_t h);

} // namespace chatmine
