#include "pdm/wavenumber.hpp"

#include <cmath>

#include "pdm/constants.hpp"

namespace pdm {

Wavenumber wavenumber(double delta_e, double mass) {
  const double q = mass * delta_e / hbar2_over_2me;  // 1/A^2, sign of delta_e
  if (q >= 0.0) {
    return {std::complex<double>(std::sqrt(q), 0.0), true};
  }
  return {std::complex<double>(0.0, std::sqrt(-q)), false};
}

}  // namespace pdm
