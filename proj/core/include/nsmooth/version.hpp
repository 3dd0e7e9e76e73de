#pragma once

namespace nsmooth {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nsmooth
