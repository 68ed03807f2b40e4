#pragma once

namespace apring {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace apring
