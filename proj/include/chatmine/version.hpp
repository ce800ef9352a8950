#pragma once

namespace chatmine {

inline constexpr const char* kToolName = "chatmine";
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace chatmine
