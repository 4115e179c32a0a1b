#pragma once

namespace hypercut {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hypercut
