#pragma once

namespace shl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace shl
