#pragma once

#include <string_view>

namespace gls {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kProgramName = "giant-lambda-scatter";

}  // namespace gls
