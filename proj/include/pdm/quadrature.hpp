#ifndef PDM_QUADRATURE_HPP
#define PDM_QUADRATURE_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "pdm/errors.hpp"

namespace pdm {

// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
// Each interval is accepted when |S2 - S1| <= 15 * local tol (the standard
// Richardson bound), with the S2 + (S2 - S1)/15 correction applied. Intervals
// that cannot converge within max_depth bisections exhaust the budget: the
// routine still sums its best values, then throws numerical_error carrying
// that sum and the accumulated error bound.
template <class F>
double adaptive_quadrature(F&& f, double a, double b, double tol = 1e-12,
                           int max_depth = 60) {
  if (a == b) return 0.0;
  if (b < a) return -adaptive_quadrature(f, b, a, tol, max_depth);

  struct Interval {
    double a, m, b;
    double fa, fm, fb;
    double s;     // Simpson estimate over [a, b]
    double tol;
    int depth;
  };

  auto simpson = [](double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
  };

  std::vector<Interval> stack;
  {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    stack.push_back({a, m, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, 0});
  }

  double total = 0.0;
  double err_bound = 0.0;
  bool exhausted = false;

  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();

    const double ml = 0.5 * (iv.a + iv.m);
    const double mr = 0.5 * (iv.m + iv.b);
    const double fml = f(ml), fmr = f(mr);
    const double h = 0.5 * (iv.b - iv.a);
    const double sl = simpson(iv.fa, fml, iv.fm, h);
    const double sr = simpson(iv.fm, fmr, iv.fb, h);
    const double diff = sl + sr - iv.s;

    if (std::isfinite(diff) && std::abs(diff) <= 15.0 * iv.tol) {
      total += sl + sr + diff / 15.0;
      err_bound += std::abs(diff) / 15.0;
      continue;
    }
    if (iv.depth >= max_depth) {
      total += sl + sr;
      err_bound += std::abs(diff);
      exhausted = true;
      continue;
    }
    stack.push_back({iv.a, ml, iv.m, iv.fa, fml, iv.fm, sl, 0.5 * iv.tol,
                     iv.depth + 1});
    stack.push_back({iv.m, mr, iv.b, iv.fm, fmr, iv.fb, sr, 0.5 * iv.tol,
                     iv.depth + 1});
  }

  if (exhausted) {
    throw numerical_error("adaptive_quadrature: subdivision budget exhausted",
                          total, err_bound);
  }
  return total;
}

}  // namespace pdm

#endif
