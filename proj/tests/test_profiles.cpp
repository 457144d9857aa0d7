#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pdm/constants.hpp"
#include "pdm/profiles.hpp"

using namespace pdm;

namespace {

const double kWidth = 100.0;

std::vector<MassProfile> all_profiles() {
  return {
      MassProfile(ConstantStep{}, kWidth),
      MassProfile(Quadratic{}, kWidth),
      MassProfile(Exponential{}, kWidth),
      MassProfile(TanhStep{}, kWidth),
      MassProfile(Rational{}, kWidth),
      MassProfile(AlloyGraded{}, kWidth),
  };
}

}  // namespace

TEST_CASE("phase integrals over the full barrier") {
  // Independently frozen values for f(d) = integral of sqrt(m) over [0, d].
  const MassProfile quad(Quadratic{}, kWidth);
  CHECK(quad.phase_integral(0.0, kWidth) ==
        doctest::Approx(30.458488018410534).epsilon(1e-13));

  const MassProfile step(ConstantStep{}, kWidth);
  CHECK(step.phase_integral(0.0, kWidth) ==
        doctest::Approx(25.787593916455254).epsilon(1e-13));

  const MassProfile tanh_p(TanhStep{}, kWidth);
  CHECK(tanh_p.phase_integral(0.0, kWidth) ==
        doctest::Approx(44.75478345369107).epsilon(1e-11));
}

TEST_CASE("phase integral is additive and anchored at zero") {
  for (const auto& p : all_profiles()) {
    CHECK(p.phase_integral(0.0, 0.0) == 0.0);
    const double whole = p.phase_integral(0.0, kWidth);
    const double split = p.phase_integral(0.0, 37.5) +
                         p.phase_integral(37.5, kWidth);
    CHECK(whole == doctest::Approx(split).epsilon(1e-12));
    CHECK(p.phase_integral(kWidth, 0.0) ==
          doctest::Approx(-whole).epsilon(1e-12));
  }
}

TEST_CASE("mass derivatives agree with finite differences") {
  const double h = 1e-3;
  for (const auto& p : all_profiles()) {
    for (double z : {5.0, 25.0, 50.0, 77.0, 95.0}) {
      const auto md = p.mass_derivs(z);
      CHECK(md.m == doctest::Approx(p.mass_at(z)).epsilon(1e-15));

      const double fp = (p.mass_at(z + h) - p.mass_at(z - h)) / (2.0 * h);
      const double fpp = (p.mass_at(z + h) - 2.0 * p.mass_at(z) +
                          p.mass_at(z - h)) / (h * h);
      CHECK(md.mp == doctest::Approx(fp).epsilon(1e-6));
      CHECK(md.mpp == doctest::Approx(fpp).epsilon(1e-4));
    }
  }
}

TEST_CASE("mass stays positive across the barrier") {
  for (const auto& p : all_profiles()) {
    for (int i = 0; i <= 200; ++i) {
      const double z = kWidth * i / 200.0;
      CHECK(p.mass_at(z) > 0.0);
      CHECK(p.sqrt_mass(z) == doctest::Approx(std::sqrt(p.mass_at(z))));
    }
  }
}

TEST_CASE("potential correction at the left edge") {
  // Frozen from the closed-form correction C/(4 m^2) (m'' - 7 m'^2 / (4 m)).
  BarrierSpec exp_bar;
  exp_bar.profile = MassProfile(Exponential{}, kWidth);
  CHECK(effective_potential(exp_bar, 0.0) - exp_bar.v0 ==
        doctest::Approx(-0.08969929689165212).epsilon(1e-12));

  BarrierSpec quad_bar;
  quad_bar.profile = MassProfile(Quadratic{}, kWidth);
  CHECK(effective_potential(quad_bar, 0.0) - quad_bar.v0 ==
        doctest::Approx(3.5969642863822457).epsilon(1e-12));
}

TEST_CASE("potential modes and support") {
  BarrierSpec bar;
  bar.profile = MassProfile(TanhStep{}, kWidth);

  bar.potential_mode = PotentialMode::Bare;
  CHECK(effective_potential(bar, 13.0) == bar.v0);
  CHECK(effective_potential(bar, 90.0) == bar.v0);

  bar.potential_mode = PotentialMode::Corrected;
  CHECK(effective_potential(bar, 50.0) != bar.v0);

  // zero outside the barrier in either mode
  for (auto mode : {PotentialMode::Bare, PotentialMode::Corrected}) {
    bar.potential_mode = mode;
    CHECK(effective_potential(bar, -1.0) == 0.0);
    CHECK(effective_potential(bar, kWidth + 1.0) == 0.0);
  }
}

TEST_CASE("alloy grading is a rescaled quadratic") {
  const MassProfile alloy(AlloyGraded{}, kWidth);
  const MassProfile quad(Quadratic{0.0665, 0.0835 * 0.32}, kWidth);
  for (int i = 0; i <= 50; ++i) {
    const double z = kWidth * i / 50.0;
    CHECK(alloy.mass_at(z) == doctest::Approx(quad.mass_at(z)).epsilon(1e-15));
  }
  CHECK(alloy.phase_integral(0.0, kWidth) ==
        doctest::Approx(quad.phase_integral(0.0, kWidth)).epsilon(1e-14));
}

TEST_CASE("mirrored profiles reflect about the midpoint") {
  for (const auto& p : all_profiles()) {
    const MassProfile m = p.mirrored();
    for (double z : {0.0, 10.0, 33.0, 64.0, kWidth}) {
      CHECK(m.mass_at(z) == doctest::Approx(p.mass_at(kWidth - z)).epsilon(1e-14));
      const auto a = m.mass_derivs(z);
      const auto b = p.mass_derivs(kWidth - z);
      CHECK(a.mp == doctest::Approx(-b.mp).epsilon(1e-12));
      CHECK(a.mpp == doctest::Approx(b.mpp).epsilon(1e-12));
    }
    CHECK(m.phase_integral(0.0, kWidth) ==
          doctest::Approx(p.phase_integral(0.0, kWidth)).epsilon(1e-11));
    CHECK(m.phase_integral(0.0, 30.0) ==
          doctest::Approx(p.phase_integral(kWidth - 30.0, kWidth)).epsilon(1e-11));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(MassProfile(Quadratic{-1.0, 0.1}, kWidth), std::domain_error);
  CHECK_THROWS_AS(MassProfile(Quadratic{0.0665, -0.1}, kWidth), std::domain_error);
  CHECK_THROWS_AS(MassProfile(ConstantStep{0.0}, kWidth), std::domain_error);
  CHECK_THROWS_AS(MassProfile(Quadratic{}, -5.0), std::domain_error);
  CHECK_THROWS_AS(MassProfile(Quadratic{}, 0.0), std::domain_error);

  const MassProfile p(Quadratic{}, kWidth);
  CHECK_THROWS_AS(p.mass_at(-0.5), std::domain_error);
  CHECK_THROWS_AS(p.mass_at(kWidth + 0.5), std::domain_error);
}

TEST_CASE("profile names") {
  CHECK(MassProfile(ConstantStep{}, kWidth).name() == "step");
  CHECK(MassProfile(Quadratic{}, kWidth).name() == "quadratic");
  CHECK(MassProfile(Exponential{}, kWidth).name() == "exponential");
  CHECK(MassProfile(TanhStep{}, kWidth).name() == "tanh");
  CHECK(MassProfile(Rational{}, kWidth).name() == "rational");
  CHECK(MassProfile(AlloyGraded{}, kWidth).name() == "alloy");
}

TEST_CASE("potential profile sampling") {
  BarrierSpec bar;
  bar.profile = MassProfile(Quadratic{}, kWidth);
  const auto rows = potential_profile(bar, 11);
  REQUIRE(rows.size() == 11);
  CHECK(rows.front().z == 0.0);
  CHECK(rows.back().z == doctest::Approx(kWidth));
  CHECK(rows.front().v ==
        doctest::Approx(effective_potential(bar, 0.0)).epsilon(1e-15));
}
