#ifndef PDM_VALIDATE_HPP
#define PDM_VALIDATE_HPP

#include <ostream>
#include <string>
#include <vector>

#include "pdm/profiles.hpp"

namespace pdm {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool mandatory = true;  // non-mandatory items report measurements only
  std::string details;
};

// One documented difference between a transcribed form and the working
// implementation, with numeric evidence.
struct ErratumEntry {
  std::string item;
  std::string printed;
  std::string implemented;
  std::string evidence;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<ErratumEntry> ledger;
  bool mandatory_ok() const;
};

// The five catalog barriers under default parameters (sigma 0.0665,
// delta 0.0835, v0 100 meV, d 100 A, m_out 0.0665).
std::vector<BarrierSpec> catalog_barriers();

// Numeric evidence for the transmission/reflection closed-form arbitration.
struct ArbitrationEvidence {
  // max |t_literal * t_boundary - 1| over catalog profiles
  double product_dev_above = 0.0;  // E in (v0, 10 v0]
  double product_dev_below = 0.0;  // E in (0, v0)
  // max |r_repaired - r_boundary| over catalog profiles, E > v0
  double repaired_r_dev = 0.0;
  // max | |r_literal|^2 - R_boundary | over catalog profiles, E > v0
  double literal_r_dev = 0.0;
  // literal reflection ratio at the constant-mass resonance (finite r would
  // contradict the inversion verdict; expect a blow-up)
  double literal_r_at_resonance = 0.0;

  bool decisive() const;
};
ArbitrationEvidence arbitrate_formulas();

ValidationReport run_validation(bool parallel = true);

void print_report(std::ostream& os, const ValidationReport& report);

}  // namespace pdm

#endif
