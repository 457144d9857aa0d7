#include "pdm/figures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pdm/constants.hpp"
#include "pdm/csv.hpp"
#include "pdm/sweep.hpp"

namespace pdm {

namespace {

std::vector<MassProfile> fig1_profiles(const Fig1Params& p) {
  return {
      MassProfile(Quadratic{p.sigma, p.delta}, p.d),
      MassProfile(Exponential{p.sigma, p.delta}, p.d),
      MassProfile(TanhStep{p.sigma, p.delta}, p.d),
      MassProfile(Rational{p.sigma, p.delta}, p.d),
  };
}

std::vector<MassProfile> fig4_profiles(const Fig4Params& p) {
  return {
      MassProfile(Quadratic{p.sigma, p.delta}, p.d),
      MassProfile(Exponential{p.sigma, p.delta}, p.d),
      MassProfile(TanhStep{p.sigma, p.delta}, p.d),
      MassProfile(Rational{p.sigma, p.delta}, p.d),
      MassProfile(AlloyGraded{}, p.d),
  };
}

}  // namespace

void write_fig1(std::ostream& os, const Fig1Params& params) {
  os << "z_angstrom,profile,v_mev,v_minus_v0_mev\n";
  for (const MassProfile& profile : fig1_profiles(params)) {
    const BarrierSpec barrier{params.v0, 0.0665, profile,
                              PotentialMode::Corrected};
    for (const PotentialSample& s :
         potential_profile(barrier, params.n_points)) {
      os << format_g12(s.z) << ',' << profile.name() << ',' << format_g12(s.v)
         << ',' << format_g12(s.v - params.v0) << '\n';
    }
  }
}

double fig2_width(double m_out, double v0) {
  if (!(m_out > 0.0) || !(v0 > 0.0)) {
    throw std::domain_error("fig2: m_out and v0 must be > 0");
  }
  return std::numbers::pi * std::sqrt(2.0 * hbar2_over_2me / (m_out * v0));
}

void write_fig2(std::ostream& os, const Fig2Params& params,
                double* failure_fraction_out) {
  if (!(params.e_min > params.v0)) {
    throw std::domain_error("fig2: grid must stay above v0 (emin > v0)");
  }
  std::vector<double> a_values = params.a_values;
  if (a_values.empty()) {
    throw std::domain_error("fig2: need at least one a value");
  }
  std::sort(a_values.begin(), a_values.end());
  const double d = fig2_width(params.m_out, params.v0);

  os << "omega,a,t\n";
  size_t rows_total = 0, rows_failed = 0;
  for (double a : a_values) {
    if (!(a > 0.0)) throw std::domain_error("fig2: a values must be > 0");
    SweepConfig cfg;
    cfg.barrier = BarrierSpec{params.v0, params.m_out,
                              MassProfile(ConstantStep{a * params.m_out}, d),
                              PotentialMode::Corrected};
    cfg.e_min = params.e_min;
    cfg.e_max = params.e_max;
    cfg.n_points = params.n_points;
    cfg.engines = {Engine::BoundarySolve};
    cfg.parallel = params.parallel;
    for (const OutputRow& row : run_sweep(cfg)) {
      os << format_g12(row.omega) << ',' << format_g12(a) << ','
         << format_g12(row.t) << '\n';
      ++rows_total;
      if (!row.ok) ++rows_failed;
    }
  }
  if (failure_fraction_out) {
    *failure_fraction_out =
        rows_total ? double(rows_failed) / double(rows_total) : 0.0;
  }
}

void write_fig2(std::ostream& os, const Fig2Params& params) {
  write_fig2(os, params, nullptr);
}

void write_fig4(std::ostream& os, const Fig4Params& params,
                double* failure_fraction_out) {
  os << "energy_mev,omega,profile,t_boundary,t_oracle,delta_t,"
        "residual_boundary,residual_oracle\n";
  size_t rows_total = 0, rows_failed = 0;
  for (const MassProfile& profile : fig4_profiles(params)) {
    SweepConfig cfg;
    cfg.barrier =
        BarrierSpec{params.v0, params.m_out, profile, PotentialMode::Corrected};
    // Grid (0, 10 v0] with n uniform points: first point at the spacing.
    cfg.e_max = 10.0 * params.v0;
    cfg.e_min = cfg.e_max / params.n_points;
    cfg.n_points = params.n_points;
    cfg.engines = {Engine::BoundarySolve, Engine::Oracle};
    cfg.n_slices = params.n_slices;
    cfg.parallel = params.parallel;

    const std::vector<OutputRow> rows = run_sweep(cfg);
    // Engines are name-ordered within each energy: boundary, then oracle.
    for (size_t i = 0; i + 1 < rows.size(); i += 2) {
      const OutputRow& rb = rows[i];
      const OutputRow& ro = rows[i + 1];
      os << format_g12(rb.energy_mev) << ',' << format_g12(rb.omega) << ','
         << profile.name() << ',' << format_g12(rb.t) << ','
         << format_g12(ro.t) << ',' << format_g12(std::abs(rb.t - ro.t)) << ','
         << format_g12(rb.residual) << ',' << format_g12(ro.residual) << '\n';
      ++rows_total;
      if (!rb.ok || !ro.ok) ++rows_failed;
    }
  }
  if (failure_fraction_out) {
    *failure_fraction_out =
        rows_total ? double(rows_failed) / double(rows_total) : 0.0;
  }
}

void write_fig4(std::ostream& os, const Fig4Params& params) {
  write_fig4(os, params, nullptr);
}

}  // namespace pdm
