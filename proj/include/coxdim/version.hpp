#pragma once

namespace coxdim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace coxdim
