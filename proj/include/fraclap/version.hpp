#pragma once

namespace fraclap {

inline constexpr const char* kVersion = "0.1.0";

} // namespace fraclap
