#pragma once

namespace quartica {

inline constexpr const char* kToolVersion = "quartica/1.0.0";

}  // namespace quartica
