#pragma once

namespace dialeval {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dialeval
