#pragma once

namespace rdcalib {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rdcalib
