#pragma once

#include <string_view>

namespace photonstat {

inline constexpr std::string_view kToolName = "photonstat";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace photonstat
