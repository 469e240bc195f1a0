#pragma once

namespace cardiac4d {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cardiac4d
