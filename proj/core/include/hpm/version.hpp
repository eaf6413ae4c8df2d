#pragma once

namespace hpm {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace hpm
