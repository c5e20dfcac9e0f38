#pragma once

namespace mbqc {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace mbqc
