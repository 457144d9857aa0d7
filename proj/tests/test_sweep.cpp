#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pdm/profiles.hpp"
#include "pdm/sweep.hpp"

using namespace pdm;

namespace {

SweepConfig base_config() {
  SweepConfig cfg;
  cfg.barrier.profile = MassProfile(Quadratic{}, 100.0);
  cfg.e_min = 10.0;
  cfg.e_max = 400.0;
  cfg.n_points = 14;
  cfg.n_slices = 256;
  return cfg;
}

}  // namespace

TEST_CASE("grid and row ordering") {
  SweepConfig cfg = base_config();
  cfg.e_min = 2.0;
  cfg.e_max = 1000.0;
  cfg.n_points = 5;
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 10);

  for (int i = 0; i < 5; ++i) {
    const double e = 2.0 + (1000.0 - 2.0) * i / 4.0;
    CHECK(rows[2 * i].energy_mev == doctest::Approx(e).epsilon(1e-15));
    CHECK(rows[2 * i + 1].energy_mev == rows[2 * i].energy_mev);
    // engines alphabetical within one energy: boundary before oracle
    CHECK(rows[2 * i].engine == Engine::BoundarySolve);
    CHECK(rows[2 * i + 1].engine == Engine::Oracle);
    CHECK(rows[2 * i].omega ==
          doctest::Approx(rows[2 * i].energy_mev / 100.0).epsilon(1e-15));
  }
  CHECK(rows.front().energy_mev == 2.0);
  CHECK(rows.back().energy_mev == 1000.0);
  CHECK(failure_fraction(rows) == 0.0);
}

TEST_CASE("engine lists are deduplicated") {
  SweepConfig cfg = base_config();
  cfg.n_points = 3;
  cfg.engines = {Engine::Oracle, Engine::BoundarySolve, Engine::Oracle};
  const auto rows = run_sweep(cfg);
  CHECK(rows.size() == 6);
  CHECK(rows[0].engine == Engine::BoundarySolve);
  CHECK(rows[1].engine == Engine::Oracle);
}

TEST_CASE("per-point failures are isolated, not fatal") {
  // The transcribed closed form is singular at e = v0; a grid point landing
  // exactly there must fail alone while the boundary engine's row stays ok.
  SweepConfig cfg = base_config();
  cfg.e_min = 50.0;
  cfg.e_max = 150.0;
  cfg.n_points = 3;  // grid {50, 100, 150}, middle point at the barrier top
  cfg.engines = {Engine::PaperFormula, Engine::BoundarySolve};
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 6);

  int failed = 0;
  for (const auto& row : rows) {
    if (!row.ok) {
      ++failed;
      CHECK(row.engine == Engine::PaperFormula);
      CHECK(row.energy_mev == 100.0);
      CHECK(std::isnan(row.t));
    } else {
      CHECK(std::isfinite(row.t));
    }
  }
  CHECK(failed == 1);
  CHECK(failure_fraction(rows) == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("zero barrier means unit transmission") {
  SweepConfig cfg;
  cfg.barrier.v0 = 0.0;
  cfg.barrier.profile = MassProfile(ConstantStep{0.0665}, 100.0);
  cfg.e_min = 5.0;
  cfg.e_max = 500.0;
  cfg.n_points = 9;
  cfg.n_slices = 32;
  const auto rows = run_sweep(cfg);
  for (const auto& row : rows) {
    CHECK(row.ok);
    CHECK(row.t == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::isnan(row.omega));
  }
}

TEST_CASE("parallel and serial sweeps are byte-identical") {
  SweepConfig cfg = base_config();
  cfg.n_points = 41;
  cfg.parallel = true;
  const auto par = run_sweep(cfg);
  cfg.parallel = false;
  const auto ser = run_sweep(cfg);
  REQUIRE(par.size() == ser.size());

  for (size_t i = 0; i < par.size(); ++i) {
    // exact bit equality, not approximate agreement
    CHECK(par[i].energy_mev == ser[i].energy_mev);
    CHECK(par[i].t == ser[i].t);
    CHECK(par[i].r == ser[i].r);
    CHECK(par[i].residual == ser[i].residual);
  }

  std::ostringstream a, b;
  write_sweep_csv(a, "quadratic", par);
  write_sweep_csv(b, "quadratic", ser);
  CHECK(a.str() == b.str());
}

TEST_CASE("csv layout") {
  SweepConfig cfg = base_config();
  cfg.n_points = 4;
  const auto rows = run_sweep(cfg);
  std::ostringstream os;
  write_sweep_csv(os, "quadratic", rows);
  std::istringstream is(os.str());

  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "energy_mev,omega,profile,engine,t,r,residual,status");
  int data_lines = 0;
  while (std::getline(is, line)) {
    ++data_lines;
    CHECK(line.find(",quadratic,") != std::string::npos);
    CHECK(line.find(",ok") != std::string::npos);
  }
  CHECK(data_lines == 8);
}

TEST_CASE("config validation") {
  SweepConfig cfg = base_config();
  cfg.e_min = 0.0;
  CHECK_THROWS_AS(run_sweep(cfg), std::domain_error);

  cfg = base_config();
  cfg.e_max = cfg.e_min;
  CHECK_THROWS_AS(run_sweep(cfg), std::domain_error);

  cfg = base_config();
  cfg.n_points = 1;
  CHECK_THROWS_AS(run_sweep(cfg), std::domain_error);

  cfg = base_config();
  cfg.engines.clear();
  CHECK_THROWS_AS(run_sweep(cfg), std::domain_error);
}
