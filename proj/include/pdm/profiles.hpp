#ifndef PDM_PROFILES_HPP
#define PDM_PROFILES_HPP

#include <cmath>
#include <string>
#include <variant>
#include <vector>

namespace pdm {

// Barrier mass-profile catalog. Shapes are functions of the normalized
// coordinate zeta = z/d, masses are ratios of the free electron mass, and
// delta carries units of zeta^2 (dimensionless in z).
struct ConstantStep {
  double m1 = 0.0665;  // m(zeta) = m1
};
struct Quadratic {
  double sigma = 0.0665, delta = 0.0835;  // sigma + delta zeta^2
};
struct Exponential {
  double sigma = 0.0665, delta = 0.0835;  // sigma exp(sqrt(delta) zeta)
};
struct TanhStep {
  double sigma = 0.0665, delta = 0.0835;  // sigma + tanh(sqrt(delta) zeta)
};
struct Rational {
  double sigma = 0.0665, delta = 0.0835;
  // [(sqrt(sigma) + delta zeta^2) / (1 + delta zeta^2)]^2
};
struct AlloyGraded {
  // Graded Al_x Ga_{1-x} As with x(zeta) = xmax zeta^2:
  // m(zeta) = base + slope * xmax * zeta^2
  double base = 0.0665, slope = 0.0835, xmax = 0.32;
};

using ProfileKind = std::variant<ConstantStep, Quadratic, Exponential,
                                 TanhStep, Rational, AlloyGraded>;

struct MassDerivs {
  double m;    // ratio of m_e
  double mp;   // dm/dz, 1/A
  double mpp;  // d2m/dz2, 1/A^2
};

// Mass profile over a barrier of width d (A). Positions are accepted on
// [0, d]; evaluation outside throws std::domain_error. mirrored() reflects
// the shape about the barrier midpoint, which is how left-incidence results
// are reused for right incidence.
class MassProfile {
 public:
  MassProfile(ProfileKind kind, double d);

  double width() const { return d_; }
  const ProfileKind& kind() const { return kind_; }
  bool is_mirrored() const { return mirrored_; }

  double mass_at(double z) const;
  MassDerivs mass_derivs(double z) const;

  // f(z1 -> z2) = integral of sqrt(m) dz, in A. Closed form for every kind
  // except TanhStep, which falls back to adaptive quadrature (tol 1e-12).
  double phase_integral(double z1, double z2) const;

  // f'(z) = sqrt(m(z))
  double sqrt_mass(double z) const { return std::sqrt(mass_at(z)); }

  MassProfile mirrored() const;

  // CLI/CSV identifier: step, quadratic, exponential, tanh, rational, alloy
  std::string name() const;

 private:
  double clamp_z(double z) const;  // validates [0, d], applies mirroring

  ProfileKind kind_;
  double d_;
  bool mirrored_ = false;
};

enum class PotentialMode { Corrected, Bare };

// Rectangular barrier of height v0 on (0, d) with the mass profile inside and
// constant mass m_out in the leads. Width is owned by the profile.
struct BarrierSpec {
  double v0 = 100.0;    // meV
  double m_out = 0.0665;
  MassProfile profile{Quadratic{}, 100.0};
  PotentialMode potential_mode = PotentialMode::Corrected;

  double d() const { return profile.width(); }
};

// Interior potential. Corrected mode adds the mass-gradient term
//   (C / 4 m^2) (m'' - 7 m'^2 / (4 m)),   C = hbar^2/(2 m_e),
// required for the closed-form interior wave; Bare mode returns v0 exactly.
// Outside [0, d] the potential is 0 in either mode.
double effective_potential(const BarrierSpec& barrier, double z);

struct PotentialSample {
  double z;  // A
  double v;  // meV
};

// n_points evenly spaced samples of the interior potential on [0, d].
std::vector<PotentialSample> potential_profile(const BarrierSpec& barrier,
                                               int n_points);

}  // namespace pdm

#endif
