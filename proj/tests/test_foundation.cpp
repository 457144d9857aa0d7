#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pdm/constants.hpp"
#include "pdm/errors.hpp"
#include "pdm/quadrature.hpp"
#include "pdm/wavenumber.hpp"

using namespace pdm;

TEST_CASE("energy-length constant") {
  // hbar^2/(2 m_e) from the 2018 exact SI definitions
  CHECK(hbar2_over_2me == doctest::Approx(3809.982111485962).epsilon(1e-14));
}

TEST_CASE("wavenumber branches") {
  const Wavenumber prop = wavenumber(100.0, 0.0665);
  CHECK(prop.propagating);
  CHECK(prop.value.imag() == 0.0);
  CHECK(prop.value.real() == doctest::Approx(0.04177816438199374).epsilon(1e-15));
  // 6-digit published check value
  CHECK(std::abs(prop.value.real() - 0.0417784) < 1e-6);

  const Wavenumber evan = wavenumber(-100.0, 0.0665);
  CHECK(!evan.propagating);
  CHECK(evan.value.real() == 0.0);
  CHECK(evan.value.imag() == doctest::Approx(0.04177816438199374).epsilon(1e-15));

  const Wavenumber zero = wavenumber(0.0, 1.0);
  CHECK(zero.propagating);
  CHECK(zero.value == std::complex<double>(0.0, 0.0));

  // k scales as sqrt(m E)
  const Wavenumber m4 = wavenumber(100.0, 4.0 * 0.0665);
  CHECK(m4.value.real() == doctest::Approx(2.0 * prop.value.real()).epsilon(1e-15));
}

TEST_CASE("adaptive quadrature on smooth integrands") {
  const double s = adaptive_quadrature([](double x) { return std::sin(x); },
                                       0.0, 3.141592653589793);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-12));

  const double p = adaptive_quadrature([](double x) { return x * x * x; },
                                       -1.0, 2.0);
  CHECK(p == doctest::Approx(15.0 / 4.0).epsilon(1e-12));

  CHECK(adaptive_quadrature([](double) { return 1.0; }, 2.0, 2.0) == 0.0);

  // orientation flip
  const double fwd = adaptive_quadrature([](double x) { return std::exp(x); },
                                         0.0, 1.0);
  const double rev = adaptive_quadrature([](double x) { return std::exp(x); },
                                         1.0, 0.0);
  CHECK(fwd == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
  CHECK(rev == doctest::Approx(-fwd).epsilon(1e-15));
}

TEST_CASE("adaptive quadrature exhaustion carries its best estimate") {
  // A jump discontinuity defeats the Richardson acceptance test at every
  // depth, so the subdivision budget must trip.
  const auto jump = [](double x) { return x < 0.5 ? 0.0 : 1.0; };
  CHECK_THROWS_AS(adaptive_quadrature(jump, 0.0, 1.0, 1e-15, 12),
                  numerical_error);
  try {
    adaptive_quadrature(jump, 0.0, 1.0, 1e-15, 12);
  } catch (const numerical_error& e) {
    CHECK(e.best_estimate() == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(e.error_estimate() > 0.0);
  }
}
