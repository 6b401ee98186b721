#pragma once

#include <cstdio>
#include <string>

#include "centdian/types.hpp"

namespace centdian {

// Shortest round-trippable-enough form used everywhere numbers are printed:
// up to 12 significant digits, no trailing zeros, "0" instead of "-0".
inline std::string format_number(Scalar v) {
  if (v == 0) v = 0;  // normalize negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace centdian
