#pragma once

namespace corona {

inline constexpr const char* kToolName = "coronalab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace corona
