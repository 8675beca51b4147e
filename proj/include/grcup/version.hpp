#pragma once

#include <string_view>

namespace grcup {

inline constexpr std::string_view kEngineVersion = "1.0.0";

}  // namespace grcup
