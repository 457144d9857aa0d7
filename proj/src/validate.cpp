#include "pdm/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "pdm/analytic.hpp"
#include "pdm/csv.hpp"
#include "pdm/errors.hpp"
#include "pdm/figures.hpp"
#include "pdm/oracle.hpp"
#include "pdm/reference.hpp"
#include "pdm/sweep.hpp"

namespace pdm {

namespace {

std::string g(double x) { return format_g12(x); }

// Engine-independent uniform doubles: mt19937 output mapped directly, so the
// sequence does not depend on library distribution internals.
class DetRng {
 public:
  explicit DetRng(uint32_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (gen_() * (1.0 / 4294967296.0));
  }

 private:
  std::mt19937 gen_;
};

BarrierSpec step_barrier(double m1, double m_out = 0.0665, double v0 = 100.0,
                         double d = 100.0) {
  return {v0, m_out, MassProfile(ConstantStep{m1}, d),
          PotentialMode::Corrected};
}

CheckResult flux_check(bool parallel) {
  double worst = 0.0;
  std::string worst_at;
  int failures = 0;
  for (const BarrierSpec& b : catalog_barriers()) {
    SweepConfig cfg;
    cfg.barrier = b;
    cfg.n_points = 200;
    cfg.e_min = 1000.0 / cfg.n_points;
    cfg.e_max = 1000.0;
    cfg.engines = {Engine::BoundarySolve, Engine::Oracle};
    cfg.n_slices = 1024;
    cfg.parallel = parallel;
    for (const OutputRow& row : run_sweep(cfg)) {
      if (!row.ok) {
        ++failures;
        continue;
      }
      if (row.residual > worst) {
        worst = row.residual;
        worst_at = b.profile.name() + std::string("/") +
                   engine_name(row.engine) + " at E=" + g(row.energy_mev);
      }
    }
  }
  CheckResult c{"flux-conservation", failures == 0 && worst <= 1e-9, true, ""};
  c.details = "max |T+R-1| = " + g(worst) + " (" + worst_at +
              "; 5 profiles x 200 energies, boundary + oracle), failures = " +
              std::to_string(failures);
  return c;
}

CheckResult constant_mass_check() {
  const BarrierSpec b = step_barrier(0.0665);
  double worst = 0.0;
  for (int i = 1; i <= 160; ++i) {
    const double e = 6.25 * i;  // spans tunneling and propagating branches
    if (std::abs(e - b.v0) < 1e-6) continue;
    const double t_ref =
        square_barrier_transmission(0.0665, b.m_out, b.v0, b.d(), e);
    worst = std::max(worst, std::abs(boundary_solve(b, e).t - t_ref));
  }
  const double e_res = square_barrier_resonance(0.0665, b.d(), b.v0);
  const double t_res = boundary_solve(b, e_res).t;
  const bool pass = worst <= 1e-12 && std::abs(t_res - 1.0) <= 1e-12;
  CheckResult c{"constant-mass-reduction", pass, true, ""};
  c.details = "max |T - textbook| = " + g(worst) +
              " over both branches; T at resonance E=" + g(e_res) +
              " meV is " + g(t_res);
  return c;
}

CheckResult cross_engine_check(bool parallel) {
  double worst_any = 0.0;
  bool pass = true;
  std::string detail = "max |T_boundary - T_oracle| at n=4096:";
  for (const BarrierSpec& b : catalog_barriers()) {
    SweepConfig cfg;
    cfg.barrier = b;
    cfg.n_points = 100;
    cfg.e_min = 10.0 * b.v0 / cfg.n_points;
    cfg.e_max = 10.0 * b.v0;
    cfg.engines = {Engine::BoundarySolve, Engine::Oracle};
    cfg.n_slices = 4096;
    cfg.parallel = parallel;
    const std::vector<OutputRow> rows = run_sweep(cfg);
    double worst = 0.0;
    for (size_t i = 0; i + 1 < rows.size(); i += 2) {
      if (!rows[i].ok || !rows[i + 1].ok) {
        pass = false;
        continue;
      }
      worst = std::max(worst, std::abs(rows[i].t - rows[i + 1].t));
    }
    const double gate = b.profile.name() == "tanh" ? 1e-5 : 1e-6;
    if (worst > gate) pass = false;
    worst_any = std::max(worst_any, worst);
    detail += " " + b.profile.name() + " " + g(worst);
  }
  return {"cross-engine-agreement", pass, true, detail};
}

CheckResult convergence_check() {
  const int n_list[] = {64, 128, 256, 512};
  bool pass = true;
  std::string detail = "observed order at E=200 meV:";
  std::string extrap = "; |extrapolated - T(4096)|:";
  for (const BarrierSpec& b : catalog_barriers()) {
    const ConvergenceReport rep = convergence(b, 200.0, n_list);
    const double t4096 = transmit(b, SliceConfig{4096}, 200.0).t;
    if (rep.observed_order < 1.7 || rep.observed_order > 2.3) pass = false;
    // Self-consistency of the Richardson value. The tanh shape's midpoint
    // error constant is roughly 20x the other profiles' (the same reason its
    // cross-engine gate is 1e-5 instead of 1e-6), so it gets 1e-7.
    const double gate = b.profile.name() == "tanh" ? 1e-7 : 1e-8;
    const double dev = std::abs(rep.extrapolated - t4096);
    if (dev > gate) pass = false;
    detail += " " + b.profile.name() + " " + g(rep.observed_order);
    extrap += " " + b.profile.name() + " " + g(dev);
  }
  return {"oracle-convergence-order", pass, true, detail + extrap};
}

CheckResult asymptote_check() {
  const double m_out = 0.0665;
  const double v0 = 100.0;
  const double d = fig2_width(m_out, v0);

  const BarrierSpec deep = step_barrier(0.0665 * m_out, m_out, v0, d);
  const auto t_of_omega = [&](double w) {
    return boundary_solve(deep, w * v0).t;
  };
  const double floor = step_mass_min_transmission(0.0665);
  const auto minima = local_minima(t_of_omega, 900.0, 1000.0, 1001);
  bool pass = !minima.empty();
  double worst_rel = 0.0;
  for (const auto& [w, t] : minima) {
    worst_rel = std::max(worst_rel, std::abs(t - floor) / floor);
  }
  if (worst_rel > 0.01) pass = false;

  const BarrierSpec unit = step_barrier(m_out, m_out, v0, d);
  double min_t = 1.0;
  for (int i = 0; i <= 3000; ++i) {
    const double w = 100.0 + i * 0.3;
    min_t = std::min(min_t, boundary_solve(unit, w * v0).t);
  }
  if (min_t < 0.999) pass = false;

  CheckResult c{"step-asymptote", pass, true, ""};
  c.details = std::to_string(minima.size()) +
              " minima in omega [900,1000], worst offset from " + g(floor) +
              " is " + g(100.0 * worst_rel) + "%; a=1 floor over omega " +
              "[100,1000] is " + g(min_t);
  return c;
}

double max_correction(const BarrierSpec& b) {
  double worst = 0.0;
  for (const PotentialSample& s : potential_profile(b, 2001)) {
    worst = std::max(worst, std::abs(s.v - b.v0));
  }
  return worst;
}

CheckResult exponential_negligible_check() {
  const BarrierSpec b{100.0, 0.0665, MassProfile(Exponential{}, 100.0),
                      PotentialMode::Corrected};
  const double worst = max_correction(b);
  CheckResult c{"exponential-correction-negligible", worst <= 0.1, true, ""};
  c.details = "max |V - v0| = " + g(worst) + " meV (gate 0.1)";
  return c;
}

struct OrderingMeasurement {
  std::string by_potential;   // "kind value" pairs, descending
  std::string by_t_shift;     // same for |T_corrected - T_bare| at E = 2 v0
  bool rational_max = false;  // the claim under test
};

OrderingMeasurement measure_ordering() {
  const double d = 100.0;
  std::vector<std::pair<std::string, BarrierSpec>> four;
  four.emplace_back("quadratic",
                    BarrierSpec{100.0, 0.0665, MassProfile(Quadratic{}, d),
                                PotentialMode::Corrected});
  four.emplace_back("exponential",
                    BarrierSpec{100.0, 0.0665, MassProfile(Exponential{}, d),
                                PotentialMode::Corrected});
  four.emplace_back("tanh",
                    BarrierSpec{100.0, 0.0665, MassProfile(TanhStep{}, d),
                                PotentialMode::Corrected});
  four.emplace_back("rational",
                    BarrierSpec{100.0, 0.0665, MassProfile(Rational{}, d),
                                PotentialMode::Corrected});

  std::vector<std::pair<std::string, double>> pot, shift;
  for (auto& [name, b] : four) {
    pot.emplace_back(name, max_correction(b));
    BarrierSpec bare = b;
    bare.potential_mode = PotentialMode::Bare;
    const double tc = transmit(b, SliceConfig{2048}, 200.0).t;
    const double tb = transmit(bare, SliceConfig{2048}, 200.0).t;
    shift.emplace_back(name, std::abs(tc - tb));
  }
  auto desc = [](auto& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
  };
  desc(pot);
  desc(shift);

  OrderingMeasurement m;
  for (const auto& [name, val] : pot) {
    m.by_potential += name + " " + g(val) + " meV; ";
  }
  for (const auto& [name, val] : shift) {
    m.by_t_shift += name + " " + g(val) + "; ";
  }
  m.rational_max =
      pot.front().first == "rational" && shift.front().first == "rational";
  return m;
}

CheckResult ordering_check(const OrderingMeasurement& m) {
  CheckResult c{"profile-correction-ordering", m.rational_max, false, ""};
  c.details =
      "claim: rational carries the largest correction. measured max|V-v0|: " +
      m.by_potential + "measured |T_corrected - T_bare| at E=200 meV: " +
      m.by_t_shift;
  return c;
}

CheckResult reciprocity_check() {
  DetRng rng(20260813);
  double worst = 0.0;
  for (const BarrierSpec& b : catalog_barriers()) {
    BarrierSpec mirror = b;
    mirror.profile = b.profile.mirrored();
    for (int i = 0; i < 50; ++i) {
      const double e = rng.uniform(0.5, 1000.0);
      worst = std::max(
          worst, std::abs(boundary_solve(b, e).t - boundary_solve(mirror, e).t));
    }
  }
  CheckResult c{"reciprocity", worst <= 1e-9, true, ""};
  c.details =
      "max |T_mirrored - T| = " + g(worst) + " (5 profiles x 50 energies)";
  return c;
}

CheckResult determinism_check() {
  Fig4Params p;
  p.n_points = 200;
  p.n_slices = 512;
  std::ostringstream a, b;
  write_fig4(a, p);
  write_fig4(b, p);
  const bool rerun_same = a.str() == b.str();

  SweepConfig cfg;
  cfg.n_points = 100;
  cfg.n_slices = 512;
  cfg.parallel = true;
  const std::vector<OutputRow> par = run_sweep(cfg);
  cfg.parallel = false;
  const std::vector<OutputRow> ser = run_sweep(cfg);
  std::ostringstream sp, ss;
  write_sweep_csv(sp, "quadratic", par);
  write_sweep_csv(ss, "quadratic", ser);
  const bool par_same = sp.str() == ss.str();

  CheckResult c{"determinism", rerun_same && par_same, true, ""};
  c.details = std::string("fig4 rerun byte-identical: ") +
              (rerun_same ? "yes" : "NO") +
              "; parallel vs serial sweep byte-identical: " +
              (par_same ? "yes" : "NO");
  return c;
}

}  // namespace

bool ValidationReport::mandatory_ok() const {
  for (const CheckResult& c : checks) {
    if (c.mandatory && !c.pass) return false;
  }
  return true;
}

std::vector<BarrierSpec> catalog_barriers() {
  const double d = 100.0;
  return {
      {100.0, 0.0665, MassProfile(Quadratic{}, d), PotentialMode::Corrected},
      {100.0, 0.0665, MassProfile(Exponential{}, d), PotentialMode::Corrected},
      {100.0, 0.0665, MassProfile(TanhStep{}, d), PotentialMode::Corrected},
      {100.0, 0.0665, MassProfile(Rational{}, d), PotentialMode::Corrected},
      {100.0, 0.0665, MassProfile(AlloyGraded{}, d), PotentialMode::Corrected},
  };
}

bool ArbitrationEvidence::decisive() const {
  return std::isfinite(product_dev_above) && std::isfinite(product_dev_below) &&
         std::isfinite(repaired_r_dev) && std::isfinite(literal_r_dev);
}

ArbitrationEvidence arbitrate_formulas() {
  ArbitrationEvidence ev;
  for (const BarrierSpec& b : catalog_barriers()) {
    for (int i = 1; i <= 40; ++i) {
      const double e = b.v0 + (10.0 * b.v0 - b.v0) * i / 40.0;
      const ScatteringResult bs = boundary_solve(b, e);
      ev.product_dev_above =
          std::max(ev.product_dev_above,
                   std::abs(paper_transmission(b, e) * bs.t_amp - 1.0));
      ev.repaired_r_dev = std::max(
          ev.repaired_r_dev, std::abs(repaired_reflection(b, e) - bs.r_amp));
      ev.literal_r_dev =
          std::max(ev.literal_r_dev,
                   std::abs(std::norm(paper_reflection(b, e)) - bs.r));
    }
    for (int i = 1; i <= 20; ++i) {
      const double e = b.v0 * i / 21.0;
      const ScatteringResult bs = boundary_solve(b, e);
      ev.product_dev_below =
          std::max(ev.product_dev_below,
                   std::abs(paper_transmission(b, e) * bs.t_amp - 1.0));
    }
  }
  const BarrierSpec step = step_barrier(0.0665);
  const double e_res = square_barrier_resonance(0.0665, step.d(), step.v0);
  ev.literal_r_at_resonance = std::abs(paper_reflection(step, e_res));
  return ev;
}

ValidationReport run_validation(bool parallel) {
  ValidationReport rep;

  rep.checks.push_back(flux_check(parallel));
  rep.checks.push_back(constant_mass_check());
  rep.checks.push_back(cross_engine_check(parallel));
  rep.checks.push_back(convergence_check());
  rep.checks.push_back(asymptote_check());
  rep.checks.push_back(exponential_negligible_check());
  const OrderingMeasurement ordering = measure_ordering();
  rep.checks.push_back(ordering_check(ordering));
  rep.checks.push_back(reciprocity_check());

  const ArbitrationEvidence ev = arbitrate_formulas();
  {
    CheckResult c{"formula-arbitration", ev.decisive(), true, ""};
    c.details =
        "verdict: the transcribed transmission ratio is the reciprocal of the "
        "transmission amplitude (max |t_literal * t_boundary - 1| = " +
        g(ev.product_dev_above) +
        " above the barrier); the transcribed reflection ratio is likewise "
        "inverted and carries one misindexed endpoint factor (repaired form "
        "matches to " +
        g(ev.repaired_r_dev) + "; literal form deviates from R by up to " +
        g(ev.literal_r_dev) + " and reaches |r| = " +
        g(ev.literal_r_at_resonance) +
        " at the constant-mass resonance); below the barrier the printed "
        "conjugations are not the analytic continuation (reciprocal identity "
        "deviation up to " +
        g(ev.product_dev_below) + ")";
    rep.checks.push_back(c);
  }

  rep.checks.push_back(determinism_check());

  const double kp_check = wavenumber(100.0, 0.0665).value.real();
  rep.ledger.push_back(
      {"interior wavenumber definition", "k = sqrt(2)/hbar (E - v0)",
       "k = sqrt((E - v0)/C), C = hbar^2/(2 m_e), mass folded into f(z)",
       "printed form is dimensionally inconsistent; working form restores "
       "1/length units"});
  rep.ledger.push_back(
      {"exterior wavenumber definition", "k' = sqrt(2 m0 E)/hbar^2",
       "k' = sqrt(m0 E / C)",
       "printed form is dimensionally inconsistent; check value k'(100 meV, "
       "m0 = 0.0665) = " +
           g(kp_check) + " 1/A"});
  rep.ledger.push_back(
      {"mass-shape coordinate units",
       "shape formulas written in z with delta carrying hidden units",
       "shapes evaluated in zeta = z/d with dimensionless delta",
       "literal-z reading yields potential corrections ~1e4 meV at d = 100 A, "
       "contradicting the small-correction premise; zeta reading yields the "
       "values reported by profile-correction-ordering"});
  rep.ledger.push_back(
      {"transmission ratio (closed form)", "presented as A5/A1",
       "literal transcription equals A1/A5; engine reports the literal value",
       "max |t_literal * t_boundary - 1| = " + g(ev.product_dev_above) +
           " for E in (v0, 10 v0], all profiles"});
  rep.ledger.push_back(
      {"reflection ratio (closed form)",
       "ratio printed with first denominator factor K+*(d)",
       "inverted ratio with that factor read as K+*(0) matches the boundary "
       "solve; engine reports the literal value",
       "max |r_repaired - r_boundary| = " + g(ev.repaired_r_dev) +
           " for E > v0; literal form reaches |r| = " +
           g(ev.literal_r_at_resonance) + " at the constant-mass resonance"});
  rep.ledger.push_back(
      {"evanescent-branch conjugation",
       "endpoint-factor conjugation applied at all energies",
       "conjugation treated as valid only above the barrier",
       "below v0 the reciprocal identity deviates by up to " +
           g(ev.product_dev_below) +
           " because conjugating the printed factors is not the k -> i|k| "
           "continuation"});
  rep.ledger.push_back(
      {"potential-correction ordering (figure claim)",
       "rational shape claimed to carry the largest correction",
       "measured ordering reported as data; claim not asserted in sweeps",
       "max |V - v0|: " + ordering.by_potential +
           "|T_corrected - T_bare| at E = 200 meV: " + ordering.by_t_shift});

  return rep;
}

void print_report(std::ostream& os, const ValidationReport& report) {
  os << "validation report\n";
  for (const CheckResult& c : report.checks) {
    os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.mandatory) os << " [informational]";
    os << ": " << c.details << "\n";
  }
  os << "erratum ledger (" << report.ledger.size() << " entries)\n";
  for (const ErratumEntry& e : report.ledger) {
    os << "  - item: " << e.item << "\n"
       << "    printed: " << e.printed << "\n"
       << "    implemented: " << e.implemented << "\n"
       << "    evidence: " << e.evidence << "\n";
  }
  os << (report.mandatory_ok() ? "all mandatory checks passed\n"
                               : "mandatory check failure\n");
}

}  // namespace pdm
