#pragma once

namespace catgsb {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace catgsb
