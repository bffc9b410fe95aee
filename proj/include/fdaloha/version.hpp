#pragma once

namespace fdaloha {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fdaloha
