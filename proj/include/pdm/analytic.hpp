#ifndef PDM_ANALYTIC_HPP
#define PDM_ANALYTIC_HPP

#include <complex>
#include <string>
#include <utility>

#include "pdm/profiles.hpp"
#include "pdm/wavenumber.hpp"

namespace pdm {

// Which computation produced a ScatteringResult. PaperFormula is the
// transcribed closed-form ratio pair (diagnostic only), BoundarySolve the
// authoritative interface-matching solve, Oracle the sliced transfer-matrix
// reference.
enum class Engine { PaperFormula, BoundarySolve, Oracle };

// CLI/CSV identifiers: paper, boundary, oracle.
const char* engine_name(Engine engine);

// Kinetic-operator ordering exponents. Continuity of psi and psi'/m at sharp
// interfaces forces alpha = gamma = 0, beta = -1.
struct MatchingExponents {
  double alpha = 0.0;
  double beta = -1.0;
  double gamma = 0.0;
};
inline constexpr MatchingExponents ben_daniel_duke{};
static_assert(ben_daniel_duke.alpha + ben_daniel_duke.beta +
                      ben_daniel_duke.gamma ==
                  -1.0 &&
              ben_daniel_duke.alpha == ben_daniel_duke.gamma);

struct ScatteringResult {
  double e = 0.0;  // meV
  std::complex<double> t_amp{};
  std::complex<double> r_amp{};
  double t = 0.0;
  double r = 0.0;
  double residual = 0.0;  // |t + r - 1|
  Engine engine = Engine::BoundarySolve;
};

// Amplitudes of the piecewise solution, normalized to unit incident wave:
// a1 = 1 incident, a2 reflected, (a3, a4) interior envelope pair, a5
// transmitted. degenerate marks the |k f(d)| ~ 0 branch where the interior
// basis {e^{-ikf}, e^{+ikf}} collapses and {1, f} is used instead.
struct BoundaryCoefficients {
  std::complex<double> a1{1.0, 0.0};
  std::complex<double> a2{};
  std::complex<double> a3{};
  std::complex<double> a4{};
  std::complex<double> a5{};
  bool degenerate = false;
};

// Endpoint factors K+-(a) = 4 k' m(a)^2 +- 4 k m_out m(a) f'(a) - i m_out m'(a)
// evaluated at both interfaces.
struct KFactors {
  std::complex<double> k_plus_0{};
  std::complex<double> k_minus_0{};
  std::complex<double> k_plus_d{};
  std::complex<double> k_minus_d{};
};

enum class Endpoint { Zero, D };

// Interior envelope psi(z) = m(z)^{1/4} (c1 e^{-i k f(z)} + c2 e^{+i k f(z)})
// with k = wavenumber(E - v0, 1) and f(z) = phase_integral(0, z). Valid only
// in Corrected potential mode; Bare mode throws unsupported_mode_error.
std::complex<double> interior_wave(const BarrierSpec& barrier, double e,
                                   double z, std::complex<double> c1,
                                   std::complex<double> c2);

// K factors at one interface; k' = wavenumber(E, m_out), k as in
// interior_wave.
std::pair<std::complex<double>, std::complex<double>> kpm(
    const BarrierSpec& barrier, double e, Endpoint endpoint);

KFactors k_factors(const BarrierSpec& barrier, double e);

// Transcribed closed-form ratios (diagnostic). Known defects are quantified
// by the validation report: the transmission ratio as published equals
// A1/A5 (the reciprocal amplitude) and the reflection ratio is likewise
// inverted with one misindexed endpoint factor. Both require k != 0.
std::complex<double> paper_transmission(const BarrierSpec& barrier, double e);
std::complex<double> paper_reflection(const BarrierSpec& barrier, double e);

// Index-repaired, re-inverted counterpart of paper_reflection; agrees with
// boundary_solve above the barrier. Kept for the arbitration checks.
std::complex<double> repaired_reflection(const BarrierSpec& barrier, double e);

// Unit-incidence amplitudes from the two matching conditions (psi and
// psi'/m continuous) at z = 0 and z = d.
BoundaryCoefficients boundary_coefficients(const BarrierSpec& barrier,
                                           double e);

// Fills t, r from |amplitudes|^2 and records residual = |t + r - 1|.
std::pair<double, double> coefficients(ScatteringResult& result);

// Authoritative analytic engine: boundary_coefficients + coefficients with
// acceptance gating (residual <= 1e-9, t and r within [0, 1 + 1e-9]);
// violations throw numerical_error.
ScatteringResult boundary_solve(const BarrierSpec& barrier, double e);

}  // namespace pdm

#endif
