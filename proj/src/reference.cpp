#include "pdm/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pdm/constants.hpp"
#include "pdm/wavenumber.hpp"

namespace pdm {

namespace {
using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};
}  // namespace

std::complex<double> square_barrier_amplitude(double m1, double m_out,
                                              double v0, double d, double e) {
  if (!(e > 0.0)) {
    throw std::domain_error("square_barrier_amplitude: energy must be > 0");
  }
  const cplx k0 = wavenumber(e, m_out).value;
  const cplx k1 = wavenumber(e - v0, m1).value;  // evanescent branch included
  const cplx eta = (k1 / m1) / (k0 / m_out);
  const cplx den =
      std::cos(k1 * d) - 0.5 * I * (eta + 1.0 / eta) * std::sin(k1 * d);
  return std::exp(-I * k0 * d) / den;
}

double square_barrier_transmission(double m1, double m_out, double v0,
                                   double d, double e) {
  return std::norm(square_barrier_amplitude(m1, m_out, v0, d, e));
}

double square_barrier_resonance(double m1, double d, double v0) {
  const double pi = std::numbers::pi;
  return v0 + pi * pi * hbar2_over_2me / (m1 * d * d);
}

double step_mass_min_transmission(double a) {
  const double s = 2.0 * std::sqrt(a) / (1.0 + a);
  return s * s;
}

std::vector<std::pair<double, double>> local_minima(
    const std::function<double(double)>& y, double x_lo, double x_hi,
    int n_grid) {
  if (n_grid < 3 || !(x_hi > x_lo)) {
    throw std::domain_error("local_minima: need x_lo < x_hi and n_grid >= 3");
  }
  std::vector<double> ys(n_grid);
  const double h = (x_hi - x_lo) / (n_grid - 1);
  for (int i = 0; i < n_grid; ++i) ys[i] = y(x_lo + i * h);

  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  std::vector<std::pair<double, double>> out;
  for (int i = 1; i + 1 < n_grid; ++i) {
    if (!(ys[i] < ys[i - 1] && ys[i] < ys[i + 1])) continue;
    double a = x_lo + (i - 1) * h;
    double b = x_lo + (i + 1) * h;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double yc = y(c), yd = y(d);
    while (b - a > 1e-10 * (std::abs(b) + 1.0)) {
      if (yc < yd) {
        b = d;
        d = c;
        yd = yc;
        c = b - gr * (b - a);
        yc = y(c);
      } else {
        a = c;
        c = d;
        yc = yd;
        d = a + gr * (b - a);
        yd = y(d);
      }
    }
    const double xm = 0.5 * (a + b);
    out.emplace_back(xm, y(xm));
  }
  return out;
}

}  // namespace pdm
