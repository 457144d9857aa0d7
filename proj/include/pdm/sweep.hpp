#ifndef PDM_SWEEP_HPP
#define PDM_SWEEP_HPP

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pdm/analytic.hpp"
#include "pdm/profiles.hpp"

namespace pdm {

struct SweepConfig {
  BarrierSpec barrier;
  double e_min = 2.0;   // meV
  double e_max = 1000.0;
  int n_points = 500;
  std::vector<Engine> engines{Engine::BoundarySolve, Engine::Oracle};
  int n_slices = 4096;
  // OpenMP fan-out across energies; the serial path computes identical rows
  // through the same per-point kernel and exists as the reference for
  // determinism checks and benchmarking.
  bool parallel = true;
};

struct OutputRow {
  double energy_mev = 0.0;
  double omega = 0.0;  // E / v0 (nan when v0 = 0)
  Engine engine = Engine::BoundarySolve;
  double t = 0.0;
  double r = 0.0;
  double residual = 0.0;
  bool ok = true;  // false marks an isolated per-point numerical failure
};

// Uniform endpoint-inclusive energy grid, every selected engine per energy.
// Rows are ordered by energy, then engine name; per-point failures yield
// marked rows instead of aborting. Invariant violations (grid, empty engine
// set) throw std::domain_error.
std::vector<OutputRow> run_sweep(const SweepConfig& cfg);

double failure_fraction(std::span<const OutputRow> rows);

// CSV: energy_mev,omega,profile,engine,t,r,residual,status
void write_sweep_csv(std::ostream& os, const std::string& profile_name,
                     std::span<const OutputRow> rows);

}  // namespace pdm

#endif
