#ifndef PDM_FIGURES_HPP
#define PDM_FIGURES_HPP

#include <ostream>
#include <vector>

namespace pdm {

// Figure-data generators. Each writes a complete CSV (header + rows) with
// the shared 12-digit formatting, so identical parameters give identical
// bytes.

// Interior potential for the quadratic, exponential, tanh and rational mass
// shapes: z_angstrom,profile,v_mev,v_minus_v0_mev.
struct Fig1Params {
  double sigma = 0.0665;
  double delta = 0.0835;
  double v0 = 100.0;  // meV
  double d = 100.0;   // A
  int n_points = 1001;
};
void write_fig1(std::ostream& os, const Fig1Params& params);

// Transmission through a constant mass step m1 = a * m_out for several a,
// on an above-barrier grid: omega,a,t. Barrier width is derived from the
// outside mass: d = pi sqrt(2 C / (m_out v0)).
struct Fig2Params {
  std::vector<double> a_values{1.0, 0.5, 0.0665};
  double v0 = 100.0;
  double m_out = 0.0665;
  double e_min = 101.0;     // meV, must stay above v0
  double e_max = 100000.0;  // omega = 1000 at the default v0
  int n_points = 2000;
  bool parallel = true;
};
void write_fig2(std::ostream& os, const Fig2Params& params);
double fig2_width(double m_out, double v0);  // A

// Both engines side by side for all five catalog profiles:
// energy_mev,omega,profile,t_boundary,t_oracle,delta_t,residual_boundary,
// residual_oracle.
struct Fig4Params {
  double sigma = 0.0665;
  double delta = 0.0835;
  double v0 = 100.0;
  double d = 100.0;
  double m_out = 0.0665;
  int n_points = 2000;  // grid (0, 10 v0], endpoint included
  int n_slices = 4096;
  bool parallel = true;
};
void write_fig4(std::ostream& os, const Fig4Params& params);

// Fraction of failed underlying sweep rows in the most recent write_fig2 /
// write_fig4 style computation is returned through this out-parameter
// variant, used for the CLI failure budget.
void write_fig2(std::ostream& os, const Fig2Params& params,
                double* failure_fraction_out);
void write_fig4(std::ostream& os, const Fig4Params& params,
                double* failure_fraction_out);

}  // namespace pdm

#endif
