#pragma once

namespace streett {

inline constexpr const char* kToolName = "streett-fool";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace streett
