#pragma once

namespace gpoly {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gpoly
