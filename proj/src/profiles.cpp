#include "pdm/profiles.hpp"

#include <cmath>
#include <stdexcept>

#include "pdm/constants.hpp"
#include "pdm/quadrature.hpp"

namespace pdm {

namespace {

// Shape value and zeta-derivatives at normalized position u in [0, 1].
struct ShapeDerivs {
  double m, mu, muu;
};

ShapeDerivs shape_derivs(const ProfileKind& kind, double u) {
  return std::visit(
      [u](const auto& p) -> ShapeDerivs {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantStep>) {
          return {p.m1, 0.0, 0.0};
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          return {p.sigma + p.delta * u * u, 2.0 * p.delta * u, 2.0 * p.delta};
        } else if constexpr (std::is_same_v<T, Exponential>) {
          const double r = std::sqrt(p.delta);
          const double m = p.sigma * std::exp(r * u);
          return {m, r * m, p.delta * m};
        } else if constexpr (std::is_same_v<T, TanhStep>) {
          const double r = std::sqrt(p.delta);
          const double t = std::tanh(r * u);
          const double sech2 = 1.0 - t * t;
          return {p.sigma + t, r * sech2, -2.0 * p.delta * sech2 * t};
        } else if constexpr (std::is_same_v<T, Rational>) {
          const double s = std::sqrt(p.sigma);
          const double v = 1.0 + p.delta * u * u;
          const double g = (s + p.delta * u * u) / v;
          const double gp = 2.0 * p.delta * u * (1.0 - s) / (v * v);
          const double gpp =
              2.0 * p.delta * (1.0 - s) * (v - 4.0 * p.delta * u * u) /
              (v * v * v);
          return {g * g, 2.0 * g * gp, 2.0 * (gp * gp + g * gpp)};
        } else {
          static_assert(std::is_same_v<T, AlloyGraded>);
          const double de = p.slope * p.xmax;
          return {p.base + de * u * u, 2.0 * de * u, 2.0 * de};
        }
      },
      kind);
}

// Antiderivative of sqrt(shape) in the normalized coordinate; nullopt-style
// fallback (TanhStep) is handled by the caller.
bool shape_sqrt_antiderivative(const ProfileKind& kind, double u,
                               double* out) {
  return std::visit(
      [u, out](const auto& p) -> bool {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantStep>) {
          *out = std::sqrt(p.m1) * u;
          return true;
        } else if constexpr (std::is_same_v<T, Quadratic> ||
                             std::is_same_v<T, AlloyGraded>) {
          double sigma, delta;
          if constexpr (std::is_same_v<T, Quadratic>) {
            sigma = p.sigma;
            delta = p.delta;
          } else {
            sigma = p.base;
            delta = p.slope * p.xmax;
          }
          if (delta == 0.0) {
            *out = std::sqrt(sigma) * u;
            return true;
          }
          const double root = std::sqrt(sigma + delta * u * u);
          *out = 0.5 * u * root +
                 0.5 * sigma / std::sqrt(delta) *
                     std::asinh(u * std::sqrt(delta / sigma));
          return true;
        } else if constexpr (std::is_same_v<T, Exponential>) {
          if (p.delta == 0.0) {
            *out = std::sqrt(p.sigma) * u;
            return true;
          }
          const double r = std::sqrt(p.delta);
          *out = std::sqrt(p.sigma) * 2.0 / r * std::exp(0.5 * r * u);
          return true;
        } else if constexpr (std::is_same_v<T, Rational>) {
          if (p.delta == 0.0) {
            *out = std::sqrt(p.sigma) * u;
            return true;
          }
          const double s = std::sqrt(p.sigma);
          const double r = std::sqrt(p.delta);
          *out = u + (s - 1.0) / r * std::atan(r * u);
          return true;
        } else {
          return false;  // TanhStep: no elementary antiderivative
        }
      },
      kind);
}

void validate_kind(const ProfileKind& kind) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantStep>) {
          if (!(p.m1 > 0.0)) throw std::domain_error("profile: m1 must be > 0");
        } else if constexpr (std::is_same_v<T, AlloyGraded>) {
          if (!(p.base > 0.0) || p.slope * p.xmax < 0.0)
            throw std::domain_error("profile: alloy grading must keep m > 0");
        } else {
          if (!(p.sigma > 0.0))
            throw std::domain_error("profile: sigma must be > 0");
          if (p.delta < 0.0)
            throw std::domain_error("profile: delta must be >= 0");
        }
      },
      kind);
}

}  // namespace

MassProfile::MassProfile(ProfileKind kind, double d) : kind_(kind), d_(d) {
  if (!(d > 0.0)) throw std::domain_error("profile: width must be > 0");
  validate_kind(kind_);
}

double MassProfile::clamp_z(double z) const {
  // Tolerate endpoint roundoff from grid generators.
  const double slack = 1e-9 * d_;
  if (z < -slack || z > d_ + slack)
    throw std::domain_error("profile: z outside [0, d]");
  z = std::min(std::max(z, 0.0), d_);
  return mirrored_ ? d_ - z : z;
}

double MassProfile::mass_at(double z) const {
  return shape_derivs(kind_, clamp_z(z) / d_).m;
}

MassDerivs MassProfile::mass_derivs(double z) const {
  const ShapeDerivs s = shape_derivs(kind_, clamp_z(z) / d_);
  const double sign = mirrored_ ? -1.0 : 1.0;
  return {s.m, sign * s.mu / d_, s.muu / (d_ * d_)};
}

double MassProfile::phase_integral(double z1, double z2) const {
  // clamp_z maps into the unmirrored shape's coordinates; substitution
  // w = d - z there flips the overall sign.
  const double a = clamp_z(z1), b = clamp_z(z2);
  const double sign = mirrored_ ? -1.0 : 1.0;

  double fa, fb;
  if (shape_sqrt_antiderivative(kind_, a / d_, &fa) &&
      shape_sqrt_antiderivative(kind_, b / d_, &fb)) {
    return sign * d_ * (fb - fa);
  }
  const auto integrand = [this](double w) {
    return std::sqrt(shape_derivs(kind_, w / d_).m);
  };
  return sign * adaptive_quadrature(integrand, a, b, 1e-12);
}

MassProfile MassProfile::mirrored() const {
  MassProfile out = *this;
  out.mirrored_ = !mirrored_;
  return out;
}

std::string MassProfile::name() const {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantStep>) return "step";
        if constexpr (std::is_same_v<T, Quadratic>) return "quadratic";
        if constexpr (std::is_same_v<T, Exponential>) return "exponential";
        if constexpr (std::is_same_v<T, TanhStep>) return "tanh";
        if constexpr (std::is_same_v<T, Rational>) return "rational";
        if constexpr (std::is_same_v<T, AlloyGraded>) return "alloy";
      },
      kind_);
}

double effective_potential(const BarrierSpec& barrier, double z) {
  if (z < 0.0 || z > barrier.d()) return 0.0;
  if (barrier.potential_mode == PotentialMode::Bare) return barrier.v0;
  const MassDerivs md = barrier.profile.mass_derivs(z);
  const double corr = hbar2_over_2me / (4.0 * md.m * md.m) *
                      (md.mpp - 7.0 * md.mp * md.mp / (4.0 * md.m));
  return barrier.v0 + corr;
}

std::vector<PotentialSample> potential_profile(const BarrierSpec& barrier,
                                               int n_points) {
  if (n_points < 2) throw std::domain_error("potential_profile: need >= 2 points");
  std::vector<PotentialSample> out;
  out.reserve(n_points);
  const double d = barrier.d();
  for (int i = 0; i < n_points; ++i) {
    const double z = d * i / (n_points - 1);
    out.push_back({z, effective_potential(barrier, z)});
  }
  return out;
}

}  // namespace pdm
