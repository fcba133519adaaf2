#pragma once

namespace gnls {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gnls
