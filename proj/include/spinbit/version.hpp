#pragma once

namespace spinbit {
inline constexpr const char* kVersion = "0.1.0";
}
