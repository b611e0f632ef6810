#pragma once

namespace cgs {

inline constexpr const char* kToolName = "cgs";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace cgs
