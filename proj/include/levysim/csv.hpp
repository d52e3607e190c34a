#pragma once

#include <cstdio>
#include <ostream>
#include <string>

namespace levysim {

// Round-trip formatting: 17 significant digits, '.' decimal point.
inline std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::ostream& write_value(std::ostream& os, double v) {
  return os << format_value(v);
}

}  // namespace levysim
