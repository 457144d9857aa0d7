#include "pdm/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "pdm/constants.hpp"
#include "pdm/errors.hpp"
#include "pdm/linsolve.hpp"

namespace pdm {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

void require_corrected(const BarrierSpec& barrier, const char* who) {
  if (barrier.potential_mode != PotentialMode::Corrected) {
    throw unsupported_mode_error(std::string(who) +
                                 ": no exact interior solution in bare mode");
  }
}

void require_positive_energy(double e, const char* who) {
  if (!(e > 0.0)) {
    throw std::domain_error(std::string(who) + ": energy must be > 0 meV");
  }
}

// Interior reduced wavenumber; the mass ratio lives in the phase function f.
cplx interior_k(const BarrierSpec& barrier, double e) {
  return wavenumber(e - barrier.v0, 1.0).value;
}

}  // namespace

const char* engine_name(Engine engine) {
  switch (engine) {
    case Engine::PaperFormula: return "paper";
    case Engine::BoundarySolve: return "boundary";
    case Engine::Oracle: return "oracle";
  }
  return "?";
}

std::complex<double> interior_wave(const BarrierSpec& barrier, double e,
                                   double z, std::complex<double> c1,
                                   std::complex<double> c2) {
  require_corrected(barrier, "interior_wave");
  const cplx k = interior_k(barrier, e);
  const double f = barrier.profile.phase_integral(0.0, z);
  const double m4 = std::pow(barrier.profile.mass_at(z), 0.25);
  return m4 * (c1 * std::exp(-I * k * f) + c2 * std::exp(I * k * f));
}

std::pair<std::complex<double>, std::complex<double>> kpm(
    const BarrierSpec& barrier, double e, Endpoint endpoint) {
  require_corrected(barrier, "kpm");
  require_positive_energy(e, "kpm");
  const cplx k = interior_k(barrier, e);
  const cplx kp = wavenumber(e, barrier.m_out).value;
  const double z = endpoint == Endpoint::Zero ? 0.0 : barrier.d();
  const MassDerivs md = barrier.profile.mass_derivs(z);
  const double fp = std::sqrt(md.m);
  const cplx base = 4.0 * kp * md.m * md.m;
  const cplx cross = 4.0 * k * barrier.m_out * md.m * fp;
  const cplx imag_term = -I * barrier.m_out * md.mp;
  return {base + cross + imag_term, base - cross + imag_term};
}

KFactors k_factors(const BarrierSpec& barrier, double e) {
  const auto [kp0, km0] = kpm(barrier, e, Endpoint::Zero);
  const auto [kpd, kmd] = kpm(barrier, e, Endpoint::D);
  return {kp0, km0, kpd, kmd};
}

std::complex<double> paper_transmission(const BarrierSpec& barrier, double e) {
  require_corrected(barrier, "paper_transmission");
  require_positive_energy(e, "paper_transmission");
  const cplx k = interior_k(barrier, e);
  if (std::abs(k) == 0.0) {
    throw std::domain_error(
        "paper_transmission: k = 0 (E = v0); use boundary_solve for the limit");
  }
  const cplx kp = wavenumber(e, barrier.m_out).value;
  const double f_d = barrier.profile.phase_integral(0.0, barrier.d());
  const double m0 = barrier.profile.mass_at(0.0);
  const double md = barrier.profile.mass_at(barrier.d());
  const KFactors kf = k_factors(barrier, e);

  // e^{ik(f(0)-f(d))} with the convention f(0) = 0
  const cplx ph_plus = std::exp(-I * k * f_d);
  const cplx ph_minus = std::exp(I * k * f_d);
  const cplx num = kf.k_plus_0 * std::conj(kf.k_plus_d) * ph_plus -
                   kf.k_minus_0 * std::conj(kf.k_minus_d) * ph_minus;
  const cplx den = 64.0 * k * kp * barrier.m_out * std::pow(m0, 1.75) *
                   std::pow(md, 1.25) * std::sqrt(md);
  return std::exp(I * kp * barrier.d()) * num / den;
}

std::complex<double> paper_reflection(const BarrierSpec& barrier, double e) {
  require_corrected(barrier, "paper_reflection");
  require_positive_energy(e, "paper_reflection");
  const cplx k = interior_k(barrier, e);
  if (std::abs(k) == 0.0) {
    throw std::domain_error(
        "paper_reflection: k = 0 (E = v0); use boundary_solve for the limit");
  }
  const double f_d = barrier.profile.phase_integral(0.0, barrier.d());
  const KFactors kf = k_factors(barrier, e);
  const cplx e2d = std::exp(2.0 * I * k * f_d);  // e^{2ikf(0)} = 1

  const cplx num = kf.k_minus_0 * std::conj(kf.k_minus_d) * e2d -
                   kf.k_plus_0 * std::conj(kf.k_plus_d);
  const cplx den = std::conj(kf.k_plus_d) * std::conj(kf.k_minus_d) * e2d -
                   std::conj(kf.k_minus_0) * std::conj(kf.k_plus_d);
  return num / den;
}

std::complex<double> repaired_reflection(const BarrierSpec& barrier,
                                         double e) {
  require_corrected(barrier, "repaired_reflection");
  require_positive_energy(e, "repaired_reflection");
  const cplx k = interior_k(barrier, e);
  const double f_d = barrier.profile.phase_integral(0.0, barrier.d());
  const KFactors kf = k_factors(barrier, e);
  const cplx e2d = std::exp(2.0 * I * k * f_d);

  const cplx num = std::conj(kf.k_plus_0) * std::conj(kf.k_minus_d) * e2d -
                   std::conj(kf.k_minus_0) * std::conj(kf.k_plus_d);
  const cplx den = kf.k_minus_0 * std::conj(kf.k_minus_d) * e2d -
                   kf.k_plus_0 * std::conj(kf.k_plus_d);
  return num / den;
}

BoundaryCoefficients boundary_coefficients(const BarrierSpec& barrier,
                                           double e) {
  require_corrected(barrier, "boundary_solve");
  require_positive_energy(e, "boundary_solve");

  const double d = barrier.d();
  const cplx k = interior_k(barrier, e);
  const double kp = wavenumber(e, barrier.m_out).value.real();
  const double f_d = barrier.profile.phase_integral(0.0, d);

  const MassDerivs md0 = barrier.profile.mass_derivs(0.0);
  const MassDerivs mdd = barrier.profile.mass_derivs(d);
  const double p = std::pow(md0.m, 0.25);
  const double q = std::pow(mdd.m, 0.25);
  // (1/m) d/dz of m^{1/4}: m'/(4 m^{7/4}) at each interface
  const double cm0 = md0.mp / (4.0 * std::pow(md0.m, 1.75));
  const double cmd = mdd.mp / (4.0 * std::pow(mdd.m, 1.75));
  const cplx iko = I * kp / barrier.m_out;
  const cplx ed = std::exp(I * kp * d);

  // Unknowns x = (A2, A3, A4, A5); rows are psi and psi'/m continuity at
  // z = 0 then z = d, with the incident amplitude moved to the rhs.
  std::array<std::array<cplx, 4>, 4> a{};
  std::array<cplx, 4> rhs{};

  BoundaryCoefficients out;
  out.degenerate = std::abs(k) * std::abs(f_d) < 1e-8;
  if (!out.degenerate) {
    const cplx em = std::exp(-I * k * f_d);
    const cplx ep = std::exp(I * k * f_d);
    a[0] = {1.0, -p, -p, 0.0};
    rhs[0] = -1.0;
    a[1] = {iko, cm0 - I * k / p, cm0 + I * k / p, 0.0};
    rhs[1] = iko;
    a[2] = {0.0, q * em, q * ep, -ed};
    rhs[2] = 0.0;
    a[3] = {0.0, (cmd - I * k / q) * em, (cmd + I * k / q) * ep, -iko * ed};
    rhs[3] = 0.0;
  } else {
    // k f(d) ~ 0 collapses the exponential basis; use {1, f(z)} instead.
    a[0] = {1.0, -p, 0.0, 0.0};
    rhs[0] = -1.0;
    a[1] = {iko, cm0, 1.0 / p, 0.0};
    rhs[1] = iko;
    a[2] = {0.0, q, q * f_d, -ed};
    rhs[2] = 0.0;
    a[3] = {0.0, cmd, cmd * f_d + 1.0 / q, -iko * ed};
    rhs[3] = 0.0;
  }

  const auto x = solve4(a, rhs);
  out.a2 = x[0];
  out.a3 = x[1];
  out.a4 = x[2];
  out.a5 = x[3];
  return out;
}

std::pair<double, double> coefficients(ScatteringResult& result) {
  result.t = std::norm(result.t_amp);
  result.r = std::norm(result.r_amp);
  result.residual = std::abs(result.t + result.r - 1.0);
  return {result.t, result.r};
}

ScatteringResult boundary_solve(const BarrierSpec& barrier, double e) {
  const BoundaryCoefficients bc = boundary_coefficients(barrier, e);
  ScatteringResult res;
  res.e = e;
  res.t_amp = bc.a5;
  res.r_amp = bc.a2;
  res.engine = Engine::BoundarySolve;
  coefficients(res);
  if (!std::isfinite(res.t) || !std::isfinite(res.r) ||
      res.t > 1.0 + 1e-9 || res.r > 1.0 + 1e-9 || res.residual > 1e-9) {
    throw numerical_error("boundary_solve: flux conservation violated", res.t,
                          res.residual);
  }
  return res;
}

}  // namespace pdm
