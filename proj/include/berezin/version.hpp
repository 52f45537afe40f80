#pragma once

namespace berezin {

inline constexpr const char* k_toolkit_name = "berezin-toolkit";
inline constexpr const char* k_toolkit_version = "0.1.0";

}  // namespace berezin
