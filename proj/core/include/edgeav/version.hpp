#pragma once

namespace edgeav {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace edgeav
