#pragma once

namespace cramer {

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace cramer
