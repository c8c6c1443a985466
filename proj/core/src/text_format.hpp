#pragma once

#include <cstdio>
#include <string>

namespace olp::detail {

/// %.<sig>g with negative zero folded to "0".
inline std::string fmt_g(double v, int significant) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

inline std::string fmt_f(double v, int decimals) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace olp::detail
