#include "pdm/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "pdm/errors.hpp"
#include "pdm/figures.hpp"
#include "pdm/sweep.hpp"
#include "pdm/validate.hpp"

namespace pdm {

namespace {

const std::set<std::string> kConfigKeys = {
    "profile", "sigma",  "delta",  "v0",     "d",
    "m-out",   "m1",     "emin",   "emax",   "points",
    "engine",  "slices", "potential-mode",   "a",   "out"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double to_double(const std::string& key, const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw std::domain_error("invalid number for '" + key + "': " + s);
  }
  return v;
}

int to_int(const std::string& key, const std::string& s) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') {
    throw std::domain_error("invalid integer for '" + key + "': " + s);
  }
  return int(v);
}

// Raw flag storage; meaningful only where the matching option was counted.
struct Flags {
  std::string profile;
  double sigma = 0.0, delta = 0.0, v0 = 0.0, d = 0.0, m_out = 0.0, m1 = 0.0;
  double emin = 0.0, emax = 0.0;
  int points = 0, slices = 0;
  std::vector<std::string> engines;
  std::string potential_mode;
  std::vector<double> a_values;
  std::string out_path;
  std::string config_path;
};

class Resolver {
 public:
  Resolver(CLI::App* sub, const std::map<std::string, std::string>& file)
      : sub_(sub), file_(file) {}

  double number(const char* flag, const char* key, double flag_val,
                double def) const {
    if (sub_->get_option(flag)->count() > 0) return flag_val;
    const auto it = file_.find(key);
    return it == file_.end() ? def : to_double(key, it->second);
  }

  int integer(const char* flag, const char* key, int flag_val, int def) const {
    if (sub_->get_option(flag)->count() > 0) return flag_val;
    const auto it = file_.find(key);
    return it == file_.end() ? def : to_int(key, it->second);
  }

  std::string text(const char* flag, const char* key,
                   const std::string& flag_val, const std::string& def) const {
    if (sub_->get_option(flag)->count() > 0) return flag_val;
    const auto it = file_.find(key);
    return it == file_.end() ? def : it->second;
  }

  std::vector<std::string> list(const char* flag, const char* key,
                                const std::vector<std::string>& flag_val,
                                const std::vector<std::string>& def) const {
    if (sub_->get_option(flag)->count() > 0) return flag_val;
    const auto it = file_.find(key);
    if (it == file_.end()) return def;
    return split(it->second, ',');
  }

 private:
  CLI::App* sub_;
  const std::map<std::string, std::string>& file_;
};

MassProfile make_profile(const std::string& name, double sigma, double delta,
                         double m1, double d) {
  if (name == "step") return {ConstantStep{m1}, d};
  if (name == "quadratic") return {Quadratic{sigma, delta}, d};
  if (name == "exponential") return {Exponential{sigma, delta}, d};
  if (name == "tanh") return {TanhStep{sigma, delta}, d};
  if (name == "rational") return {Rational{sigma, delta}, d};
  if (name == "alloy") return {AlloyGraded{}, d};
  throw std::domain_error("unknown profile: " + name);
}

Engine make_engine(const std::string& name) {
  if (name == "paper") return Engine::PaperFormula;
  if (name == "boundary") return Engine::BoundarySolve;
  if (name == "oracle") return Engine::Oracle;
  throw std::domain_error("unknown engine: " + name);
}

PotentialMode make_mode(const std::string& name) {
  if (name == "corrected") return PotentialMode::Corrected;
  if (name == "bare") return PotentialMode::Bare;
  throw std::domain_error("unknown potential-mode: " + name);
}

int write_to(const std::string& path, std::ostream& fallback,
             std::ostream& err,
             const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(fallback);
    return 0;
  }
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) {
    err << "cannot open output file: " << path << "\n";
    return 1;
  }
  writer(ofs);
  return 0;
}

}  // namespace

std::map<std::string, std::string> parse_config_file(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::domain_error("config line " + std::to_string(lineno) +
                              " is not key=value: " + t);
    }
    const std::string key = trim(t.substr(0, eq));
    if (!kConfigKeys.count(key)) {
      throw std::domain_error("unknown config key: " + key);
    }
    out[key] = trim(t.substr(eq + 1));
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Transmission and reflection coefficients for a 1-D potential barrier "
      "with a position-dependent effective mass"};
  app.require_subcommand(1);

  Flags f;
  const auto add_common = [&f](CLI::App* sub) {
    sub->add_option("--profile", f.profile,
                    "mass profile: step|quadratic|exponential|tanh|rational|"
                    "alloy");
    sub->add_option("--sigma", f.sigma, "shape mass ratio at z=0");
    sub->add_option("--delta", f.delta, "shape strength (dimensionless)");
    sub->add_option("--v0", f.v0, "barrier height, meV");
    sub->add_option("--d", f.d, "barrier width, A");
    sub->add_option("--m-out", f.m_out, "lead mass ratio");
    sub->add_option("--m1", f.m1, "step-profile interior mass ratio");
    sub->add_option("--emin", f.emin, "sweep start, meV");
    sub->add_option("--emax", f.emax, "sweep end, meV");
    sub->add_option("--points", f.points, "number of grid points");
    sub->add_option("--engine", f.engines,
                    "paper|boundary|oracle (repeatable)");
    sub->add_option("--slices", f.slices, "oracle slice count");
    sub->add_option("--potential-mode", f.potential_mode, "corrected|bare");
    sub->add_option("--a", f.a_values,
                    "fig2 mass ratios m1/m_out (repeatable)");
    sub->add_option("--out", f.out_path, "output file (default: stdout)");
    sub->add_option("--config", f.config_path,
                    "key=value config file (flags take precedence)");
  };

  add_common(app.add_subcommand("sweep", "energy sweep CSV"));
  add_common(app.add_subcommand("fig1", "interior potential profiles CSV"));
  add_common(app.add_subcommand("fig2", "constant-step transmission CSV"));
  add_common(app.add_subcommand("fig4", "cross-engine transmission CSV"));
  add_common(app.add_subcommand(
      "validate", "invariant checks, formula arbitration, erratum ledger"));

  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
      return app.exit(e, out, err) == 0 ? 0 : 1;
    }
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();

  try {
    std::map<std::string, std::string> file;
    if (sub->get_option("--config")->count() > 0) {
      std::ifstream ifs(f.config_path);
      if (!ifs) {
        throw std::domain_error("cannot read config file: " + f.config_path);
      }
      file = parse_config_file(ifs);
    }
    const Resolver rv(sub, file);

    const std::string profile =
        rv.text("--profile", "profile", f.profile, "quadratic");
    const double sigma = rv.number("--sigma", "sigma", f.sigma, 0.0665);
    const double delta = rv.number("--delta", "delta", f.delta, 0.0835);
    const double v0 = rv.number("--v0", "v0", f.v0, 100.0);
    const double d = rv.number("--d", "d", f.d, 100.0);
    const double m_out = rv.number("--m-out", "m-out", f.m_out, 0.0665);
    const double m1 = rv.number("--m1", "m1", f.m1, 0.0665);
    const int slices = rv.integer("--slices", "slices", f.slices, 4096);
    const std::string mode_name = rv.text("--potential-mode", "potential-mode",
                                          f.potential_mode, "corrected");
    const std::string out_path = rv.text("--out", "out", f.out_path, "");

    int def_points = 500;
    double def_emin = 2.0, def_emax = 1000.0;
    if (cmd == "fig1") def_points = 1001;
    if (cmd == "fig2") {
      def_points = 2000;
      def_emin = 1.01 * v0;
      def_emax = 1000.0 * v0;
    }
    if (cmd == "fig4") def_points = 2000;
    const int points = rv.integer("--points", "points", f.points, def_points);
    const double emin = rv.number("--emin", "emin", f.emin, def_emin);
    const double emax = rv.number("--emax", "emax", f.emax, def_emax);

    const PotentialMode mode = make_mode(mode_name);
    if (!(sigma > 0.0)) throw std::domain_error("sigma must be > 0");
    if (delta < 0.0) throw std::domain_error("delta must be >= 0");
    if (v0 < 0.0) throw std::domain_error("v0 must be >= 0");
    if (!(d > 0.0)) throw std::domain_error("d must be > 0");
    if (!(m_out > 0.0)) throw std::domain_error("m-out must be > 0");
    if (!(m1 > 0.0)) throw std::domain_error("m1 must be > 0");
    if (points < 2) throw std::domain_error("points must be >= 2");
    if (slices < 1) throw std::domain_error("slices must be >= 1");

    if (cmd == "validate") {
      const ValidationReport report = run_validation(true);
      print_report(out, report);
      if (!out_path.empty()) {
        const int rc = write_to(out_path, out, err, [&](std::ostream& os) {
          print_report(os, report);
        });
        if (rc != 0) return rc;
      }
      return report.mandatory_ok() ? 0 : 3;
    }

    if (cmd == "fig1") {
      Fig1Params p;
      p.sigma = sigma;
      p.delta = delta;
      p.v0 = v0;
      p.d = d;
      p.n_points = points;
      return write_to(out_path, out, err,
                      [&](std::ostream& os) { write_fig1(os, p); });
    }

    if (cmd == "fig2") {
      Fig2Params p;
      std::vector<double> a_values = f.a_values;
      if (sub->get_option("--a")->count() == 0) {
        const auto it = file.find("a");
        if (it != file.end()) {
          a_values.clear();
          for (const std::string& tok : split(it->second, ',')) {
            a_values.push_back(to_double("a", tok));
          }
        } else {
          a_values = {1.0, 0.5, 0.0665};
        }
      }
      p.a_values = a_values;
      p.v0 = v0;
      p.m_out = m_out;
      p.e_min = emin;
      p.e_max = emax;
      p.n_points = points;
      if (!(p.e_min < p.e_max)) {
        throw std::domain_error("need emin < emax");
      }
      double failed = 0.0;
      const int rc = write_to(out_path, out, err, [&](std::ostream& os) {
        write_fig2(os, p, &failed);
      });
      if (rc != 0) return rc;
      return failed > 0.10 ? 2 : 0;
    }

    if (cmd == "fig4") {
      if (mode == PotentialMode::Bare) {
        throw std::domain_error(
            "fig4 compares the analytic engine; --potential-mode bare is "
            "oracle-only");
      }
      Fig4Params p;
      p.sigma = sigma;
      p.delta = delta;
      p.v0 = v0;
      p.d = d;
      p.m_out = m_out;
      p.n_points = points;
      p.n_slices = slices;
      double failed = 0.0;
      const int rc = write_to(out_path, out, err, [&](std::ostream& os) {
        write_fig4(os, p, &failed);
      });
      if (rc != 0) return rc;
      return failed > 0.10 ? 2 : 0;
    }

    // sweep
    SweepConfig cfg;
    cfg.barrier = BarrierSpec{v0, m_out,
                              make_profile(profile, sigma, delta, m1, d), mode};
    cfg.e_min = emin;
    cfg.e_max = emax;
    cfg.n_points = points;
    cfg.n_slices = slices;
    std::vector<std::string> engine_names =
        rv.list("--engine", "engine", f.engines, {"boundary", "oracle"});
    if (engine_names.empty()) {
      throw std::domain_error("need at least one engine");
    }
    cfg.engines.clear();
    for (const std::string& name : engine_names) {
      const Engine engine = make_engine(name);
      if (mode == PotentialMode::Bare && engine != Engine::Oracle) {
        throw std::domain_error(
            "--potential-mode bare supports --engine oracle only");
      }
      cfg.engines.push_back(engine);
    }
    if (!(cfg.e_min > 0.0) || !(cfg.e_min < cfg.e_max)) {
      throw std::domain_error("need 0 < emin < emax");
    }

    const std::vector<OutputRow> rows = run_sweep(cfg);
    const int rc = write_to(out_path, out, err, [&](std::ostream& os) {
      write_sweep_csv(os, cfg.barrier.profile.name(), rows);
    });
    if (rc != 0) return rc;
    return failure_fraction(rows) > 0.10 ? 2 : 0;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const numerical_error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace pdm
