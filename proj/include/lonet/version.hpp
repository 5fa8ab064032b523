#pragma once

namespace lonet {

inline constexpr const char* kToolName = "lonet";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace lonet
