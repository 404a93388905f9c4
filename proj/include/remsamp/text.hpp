// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdio>
#include <string>

namespace remsamp {

// All numeric output uses 17 significant digits so values round-trip
// bit-exactly through text.
inline std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace remsamp
