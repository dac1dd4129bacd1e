// version.hpp

#pragma once

namespace vcmps {
inline constexpr const char* kVersion = "0.1.0";
}
