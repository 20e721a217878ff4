#pragma once

namespace ddakit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ddakit
