#ifndef PDM_ORACLE_HPP
#define PDM_ORACLE_HPP

#include <complex>
#include <span>
#include <vector>

#include "pdm/analytic.hpp"
#include "pdm/profiles.hpp"
#include "pdm/wavenumber.hpp"

namespace pdm {

// Uniform slab: thickness in A, constant mass ratio and potential (meV).
struct Layer {
  double thickness;
  double m;
  double v;
};

// 2x2 complex transfer matrix on (right-moving, left-moving) coefficient
// pairs, composed left lead -> structure -> right lead.
struct TwoPort {
  std::complex<double> m11{1.0}, m12{}, m21{}, m22{1.0};

  TwoPort operator*(const TwoPort& rhs) const {
    return {m11 * rhs.m11 + m12 * rhs.m21, m11 * rhs.m12 + m12 * rhs.m22,
            m21 * rhs.m11 + m22 * rhs.m21, m21 * rhs.m12 + m22 * rhs.m22};
  }
};

enum class Sampling { Midpoint };

struct SliceConfig {
  int n_slices = 4096;
  Sampling sampling = Sampling::Midpoint;
};

// Equal-width midpoint-sampled slabs covering [0, d] exactly. Piecewise
// constant profiles are reproduced exactly since the slice walls include the
// only discontinuities (the barrier edges).
std::vector<Layer> slice(const BarrierSpec& barrier, const SliceConfig& cfg);

// Matching matrix at a mass/potential step from continuity of psi and
// psi'/m, with velocity ratio eta = (k_r / m_r) / (k_l / m_l):
//   1/2 * ((1+eta, 1-eta), (1-eta, 1+eta)).
// k_left = 0 makes the interface singular and throws numerical_error; the
// caller is expected to apply the degeneracy guard first.
TwoPort interface_transfer(double m_left, double m_right, Wavenumber k_left,
                           Wavenumber k_right);

// diag(e^{-ikt}, e^{+ikt}). Decay exponents |Im k| * t > 50 would overflow
// downstream products and throw numerical_error.
TwoPort layer_propagation(Wavenumber k, double thickness);

// Transfer-matrix transmission for a pre-sliced structure between equal
// leads of mass m_out at zero potential: t = 1/M11, r = M21/M11.
ScatteringResult transmit_layers(std::span<const Layer> layers, double m_out,
                                 double e);

ScatteringResult transmit(const BarrierSpec& barrier, const SliceConfig& cfg,
                          double e);

struct ConvergenceReport {
  std::vector<int> n_slices;
  std::vector<double> t;
  double extrapolated = 0.0;   // order-2 Richardson from the last pair
  double observed_order = 0.0; // mean over successive difference triples
  bool exact = false;          // T(n) constant to roundoff
};

// Transmission vs slice count. n_list must be strictly increasing, each >= 2.
ConvergenceReport convergence(const BarrierSpec& barrier, double e,
                              std::span<const int> n_list);

}  // namespace pdm

#endif
