#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "pdm/analytic.hpp"
#include "pdm/errors.hpp"
#include "pdm/oracle.hpp"
#include "pdm/profiles.hpp"
#include "pdm/reference.hpp"

using namespace pdm;
using cplx = std::complex<double>;

namespace {

BarrierSpec make_barrier(ProfileKind kind, double d = 100.0) {
  BarrierSpec bar;
  bar.profile = MassProfile(kind, d);
  return bar;
}

}  // namespace

TEST_CASE("slicing covers the barrier with midpoint samples") {
  const auto bar = make_barrier(Quadratic{});
  const auto layers = slice(bar, SliceConfig{4});
  REQUIRE(layers.size() == 4);
  double total = 0.0;
  for (size_t i = 0; i < layers.size(); ++i) {
    CHECK(layers[i].thickness == doctest::Approx(25.0));
    const double zm = 12.5 + 25.0 * i;
    CHECK(layers[i].m == doctest::Approx(bar.profile.mass_at(zm)).epsilon(1e-15));
    CHECK(layers[i].v ==
          doctest::Approx(effective_potential(bar, zm)).epsilon(1e-15));
    total += layers[i].thickness;
  }
  CHECK(total == doctest::Approx(100.0));
  CHECK_THROWS_AS(slice(bar, SliceConfig{0}), std::domain_error);
}

TEST_CASE("transfer matrices compose associatively") {
  const TwoPort a{cplx(1.0, 0.5), cplx(0.2), cplx(-0.1, 1.0), cplx(2.0)};
  const TwoPort b{cplx(0.0, 1.0), cplx(3.0), cplx(0.5), cplx(1.0, -1.0)};
  const TwoPort c{cplx(2.0), cplx(0.0, -0.5), cplx(1.0), cplx(0.25)};
  const TwoPort lhs = (a * b) * c;
  const TwoPort rhs = a * (b * c);
  CHECK(std::abs(lhs.m11 - rhs.m11) < 1e-14);
  CHECK(std::abs(lhs.m12 - rhs.m12) < 1e-14);
  CHECK(std::abs(lhs.m21 - rhs.m21) < 1e-14);
  CHECK(std::abs(lhs.m22 - rhs.m22) < 1e-14);
}

TEST_CASE("single interface matches the velocity-step closed form") {
  const double m_l = 0.0665, m_r = 0.2;
  const Wavenumber k_l = wavenumber(250.0, m_l);
  const Wavenumber k_r = wavenumber(150.0, m_r);
  const TwoPort m = interface_transfer(m_l, m_r, k_l, k_r);

  const double v_l = k_l.value.real() / m_l;
  const double v_r = k_r.value.real() / m_r;
  const cplx t = 1.0 / m.m11;
  const cplx r = m.m21 / m.m11;
  CHECK(std::abs(r - (v_l - v_r) / (v_l + v_r)) < 1e-14);
  CHECK(std::abs(t - 2.0 * v_l / (v_l + v_r)) < 1e-14);
  // flux balance across the step
  const double eta = v_r / v_l;
  CHECK(1.0 - std::norm(r) == doctest::Approx(eta * std::norm(t)).epsilon(1e-14));

  // equal media: identity
  const TwoPort id = interface_transfer(m_l, m_l, k_l, k_l);
  CHECK(std::abs(id.m11 - 1.0) < 1e-15);
  CHECK(std::abs(id.m12) < 1e-15);
  CHECK(std::abs(id.m21) < 1e-15);
  CHECK(std::abs(id.m22 - 1.0) < 1e-15);

  CHECK_THROWS_AS(interface_transfer(0.0, m_r, k_l, k_r), std::domain_error);
  CHECK_THROWS_AS(interface_transfer(m_l, m_r, wavenumber(0.0, m_l), k_r),
                  numerical_error);
}

TEST_CASE("layer propagation") {
  const Wavenumber k = wavenumber(80.0, 0.0665);
  const TwoPort id = layer_propagation(k, 0.0);
  CHECK(std::abs(id.m11 - 1.0) < 1e-15);
  CHECK(std::abs(id.m22 - 1.0) < 1e-15);

  const TwoPort p = layer_propagation(k, 37.0);
  CHECK(std::abs(std::abs(p.m11) - 1.0) < 1e-14);
  CHECK(std::abs(p.m11 * p.m22 - 1.0) < 1e-14);
  CHECK(std::abs(p.m12) == 0.0);
  CHECK(std::abs(p.m21) == 0.0);

  CHECK_THROWS_AS(layer_propagation(k, -1.0), std::domain_error);
  // deep evanescent slab would overflow the composed product
  const Wavenumber evan = wavenumber(-4000.0, 1.0);
  CHECK_THROWS_AS(layer_propagation(evan, 100.0), numerical_error);
}

TEST_CASE("piecewise-constant structures are resolved exactly") {
  const auto bar = make_barrier(ConstantStep{0.12});
  for (int n : {1, 7, 64}) {
    for (double e : {40.0, 150.0, 300.0}) {
      const auto res = transmit(bar, SliceConfig{n}, e);
      const double t_ref = square_barrier_transmission(0.12, bar.m_out, bar.v0,
                                                       bar.d(), e);
      CHECK(res.t == doctest::Approx(t_ref).epsilon(1e-12));
      CHECK(res.residual <= 1e-9);
      CHECK(res.engine == Engine::Oracle);
    }
  }
}

TEST_CASE("free propagation transmits everything") {
  BarrierSpec bar;
  bar.v0 = 0.0;
  bar.profile = MassProfile(ConstantStep{0.0665}, 100.0);
  const auto res = transmit(bar, SliceConfig{16}, 123.0);
  CHECK(res.t == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(res.r <= 1e-13);
}

TEST_CASE("oracle amplitude phase matches the analytic engine") {
  const auto bar = make_barrier(ConstantStep{0.12});
  for (double e : {60.0, 210.0}) {
    const auto ora = transmit(bar, SliceConfig{8}, e);
    const auto ana = boundary_solve(bar, e);
    CHECK(std::abs(ora.t_amp - ana.t_amp) < 1e-12);
    CHECK(std::abs(ora.r_amp - ana.r_amp) < 1e-12);
  }
}

TEST_CASE("degeneracy guard keeps the barrier-top energy regular") {
  // Every slice of a constant-step barrier sits at v = v0; E = v0 would make
  // each slice wavenumber vanish. The guard nudges E by 1e-9 meV.
  const auto bar = make_barrier(ConstantStep{});
  const auto res = transmit(bar, SliceConfig{32}, 100.0);
  CHECK(std::isfinite(res.t));
  CHECK(res.t == doctest::Approx(boundary_solve(bar, 100.0).t).epsilon(1e-5));
}

TEST_CASE("smooth profiles converge at second order") {
  const auto bar = make_barrier(Quadratic{});
  const std::vector<int> ns{64, 128, 256, 512};
  const auto rep = convergence(bar, 200.0, ns);
  REQUIRE(rep.t.size() == 4);
  CHECK(!rep.exact);
  CHECK(rep.observed_order > 1.7);
  CHECK(rep.observed_order < 2.3);
  // Richardson value should beat the finest raw slice count.
  const double t_fine = transmit(bar, SliceConfig{8192}, 200.0).t;
  CHECK(std::abs(rep.extrapolated - t_fine) <
        std::abs(rep.t.back() - t_fine));
}

TEST_CASE("piecewise-constant profiles are flagged as exact") {
  const auto bar = make_barrier(ConstantStep{0.12});
  const std::vector<int> ns{4, 8, 16};
  const auto rep = convergence(bar, 200.0, ns);
  CHECK(rep.exact);
  CHECK(std::isinf(rep.observed_order));
  CHECK(rep.extrapolated == doctest::Approx(rep.t.back()));
}

TEST_CASE("convergence input validation") {
  const auto bar = make_barrier(Quadratic{});
  const std::vector<int> too_few{64};
  CHECK_THROWS_AS(convergence(bar, 200.0, too_few), std::domain_error);
  const std::vector<int> not_increasing{64, 64};
  CHECK_THROWS_AS(convergence(bar, 200.0, not_increasing), std::domain_error);
  const std::vector<int> too_small{1, 2};
  CHECK_THROWS_AS(convergence(bar, 200.0, too_small), std::domain_error);
}

TEST_CASE("oracle rejects nonpositive energies") {
  const auto bar = make_barrier(Quadratic{});
  CHECK_THROWS_AS(transmit(bar, SliceConfig{8}, 0.0), std::domain_error);
  CHECK_THROWS_AS(transmit(bar, SliceConfig{8}, -10.0), std::domain_error);
}

TEST_CASE("bare potential mode runs through the oracle") {
  auto bar = make_barrier(Quadratic{});
  bar.potential_mode = PotentialMode::Bare;
  const auto res = transmit(bar, SliceConfig{2048}, 200.0);
  CHECK(std::isfinite(res.t));
  CHECK(res.residual <= 1e-9);
  // the correction term shifts the corrected-mode answer away from this one
  bar.potential_mode = PotentialMode::Corrected;
  const auto corr = transmit(bar, SliceConfig{2048}, 200.0);
  CHECK(std::abs(res.t - corr.t) > 1e-4);
}
