#ifndef PDM_CONSTANTS_HPP
#define PDM_CONSTANTS_HPP

// Working units: energy in meV, length in Angstrom, masses as ratios of the
// free electron mass. Every dimensional formula in the library reduces to the
// single combination hbar^2 / (2 m_e).

namespace pdm {

inline constexpr double hbar_js = 1.054571817e-34;     // J s
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double ev_j = 1.602176634e-19;        // J per eV

// hbar^2 / (2 m_e) in meV A^2:
//   (hbar^2 / (2 m_e)) [J^2 s^2 / kg] -> / ev_j * 1e3 [meV m^2] -> * 1e20 [meV A^2]
inline constexpr double hbar2_over_2me =
    hbar_js * hbar_js / (2.0 * electron_mass_kg) / ev_j * 1.0e3 * 1.0e20;

static_assert(hbar2_over_2me > 3809.98 && hbar2_over_2me < 3809.99);

}  // namespace pdm

#endif
