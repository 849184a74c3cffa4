#pragma once

namespace coordnet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace coordnet
