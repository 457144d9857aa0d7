#ifndef PDM_CSV_HPP
#define PDM_CSV_HPP

#include <cstdio>
#include <string>

namespace pdm {

// All numeric CSV output goes through one formatter: 12 significant digits,
// shortest form, C locale. Keeping this single choke point is what makes
// byte-identical reruns cheap to guarantee.
inline std::string format_g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace pdm

#endif
