#include "pdm/linsolve.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "pdm/errors.hpp"

namespace pdm {

std::array<std::complex<double>, 4> solve4(
    std::array<std::array<std::complex<double>, 4>, 4> a,
    std::array<std::complex<double>, 4> b) {
  constexpr int n = 4;
  double pivot_min = std::numeric_limits<double>::infinity();
  double pivot_max = 0.0;

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    const double mag = std::abs(a[col][col]);
    pivot_min = std::min(pivot_min, mag);
    pivot_max = std::max(pivot_max, mag);
    if (mag == 0.0 || pivot_max / pivot_min > 1e12) {
      throw numerical_error("solve4: singular or ill-conditioned system",
                            pivot_max / pivot_min, 0.0);
    }
    for (int row = col + 1; row < n; ++row) {
      const std::complex<double> factor = a[row][col] / a[col][col];
      a[row][col] = 0.0;
      for (int j = col + 1; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }

  std::array<std::complex<double>, 4> x{};
  for (int row = n - 1; row >= 0; --row) {
    std::complex<double> acc = b[row];
    for (int j = row + 1; j < n; ++j) acc -= a[row][j] * x[j];
    x[row] = acc / a[row][row];
  }
  return x;
}

}  // namespace pdm
