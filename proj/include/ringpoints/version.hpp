#pragma once

namespace ringpoints {

inline constexpr const char* version = "0.1.0";

} // namespace ringpoints
