#ifndef PDM_REFERENCE_HPP
#define PDM_REFERENCE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace pdm {

// Textbook closed forms for the constant-mass rectangular barrier between
// equal leads (mass m_out, zero outside potential), used as independent
// checks on both engines. Amplitude convention matches boundary_solve:
// transmitted wave a5 e^{i k0 z} with unit incidence from the left.
std::complex<double> square_barrier_amplitude(double m1, double m_out,
                                              double v0, double d, double e);

double square_barrier_transmission(double m1, double m_out, double v0,
                                   double d, double e);

// First above-barrier unit-transmission energy: v0 + pi^2 C / (m1 d^2).
double square_barrier_resonance(double m1, double d, double v0);

// Deep-oscillation floor of T for a mass step a = m1/m_out at energies far
// above the barrier: [2 sqrt(a) / (1 + a)]^2.
double step_mass_min_transmission(double a);

// Local minima of y sampled on a uniform grid, refined by golden-section
// search on the enclosing bracket. Returns (x, y) pairs.
std::vector<std::pair<double, double>> local_minima(
    const std::function<double(double)>& y, double x_lo, double x_hi,
    int n_grid);

}  // namespace pdm

#endif
