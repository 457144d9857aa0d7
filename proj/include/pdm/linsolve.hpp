#ifndef PDM_LINSOLVE_HPP
#define PDM_LINSOLVE_HPP

#include <array>
#include <complex>

namespace pdm {

// Solves the 4x4 complex system a x = b by Gaussian elimination with partial
// pivoting. The pivot ratio max|pivot|/min|pivot| serves as a cheap condition
// estimate; ratios above 1e12 (or a vanishing pivot) throw numerical_error.
std::array<std::complex<double>, 4> solve4(
    std::array<std::array<std::complex<double>, 4>, 4> a,
    std::array<std::complex<double>, 4> b);

}  // namespace pdm

#endif
