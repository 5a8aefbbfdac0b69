#pragma once

namespace chiralwalk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace chiralwalk
