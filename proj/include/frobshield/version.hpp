#pragma once

namespace frobshield {

inline constexpr const char* kToolName = "frobshield";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace frobshield
