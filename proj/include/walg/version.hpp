#pragma once

namespace walg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace walg
