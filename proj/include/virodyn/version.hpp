#pragma once

namespace virodyn {

inline constexpr const char* version = "0.1.0";

} // namespace virodyn
