#ifndef PDM_WAVENUMBER_HPP
#define PDM_WAVENUMBER_HPP

#include <complex>

namespace pdm {

// Reduced wavenumber k = sqrt(m (E - V) / C), C = hbar^2/(2 m_e).
// Propagating branch is real positive; evanescent branch is +i |k| so that
// exp(+i k z) decays for growing z.
struct Wavenumber {
  std::complex<double> value;  // 1/A
  bool propagating;
};

// delta_e in meV (E - V), mass as a ratio of m_e. Callers that fold the mass
// into a phase function pass mass = 1.
Wavenumber wavenumber(double delta_e, double mass);

}  // namespace pdm

#endif
