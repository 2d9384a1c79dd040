#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "lievol/errors.hpp"
#include "lievol/quad.hpp"
#include "lievol/rootsys.hpp"
#include "lievol/special.hpp"
#include "lievol/summation.hpp"
#include "lievol/vogel.hpp"

namespace lievol {

/// ln(2 sqrt(2) pi), the per-dimension factor of the volume formulas.
inline const double kLogVolumeBase = std::log(2.0 * std::numbers::sqrt2 * std::numbers::pi);

/// Raw volumes are reported only when |ln Vol| stays below this.
inline constexpr double kMaxRepresentableLog = 700.0;

struct VolumeReport {
  SimpleLieType group;
  std::int64_t dim = 0;
  double phi_universal = 0.0;
  double phi_universal_error = 0.0;
  double phi_kp = 0.0;
  /// Only for the A family: Phi implied by the factorial closed form.
  std::optional<double> phi_macdonald;
  double log_volume = 0.0;
  std::optional<double> volume;
  double route_discrepancy = 0.0;
  Tolerance tolerance;
  bool converged = false;
  /// True when every applicable route pair agreed within the bound.
  bool agreed = false;
  std::vector<std::string> failures;
  std::string notes;

  bool ok() const { return converged && agreed; }
};

/// -sum_{mu in R+} ln[sin(2 pi <rho,mu>) / (2 pi <rho,mu>)].
inline double phi_kp(const RootSystem& rs) {
  CompensatedSum s;
  for (const Rational& p : rho_pairings_killing(rs)) {
    const double arg = 2.0 * std::numbers::pi * p.to_double();
    const double factor = std::sin(arg) / arg;
    if (!(factor > 0.0)) {
      throw InvariantViolation("non-positive sinc factor for <rho,mu> = " + p.str() + " in " +
                               cartan_name(rs.lie_type));
    }
    s.add(-std::log(factor));
  }
  return s.value();
}

inline std::optional<double> representable_volume(double log_volume) {
  if (std::fabs(log_volume) > kMaxRepresentableLog) return std::nullopt;
  return std::exp(log_volume);
}

/// Dimension, Phi and the continued log-volume dim ln(2 sqrt 2 pi) - Phi at
/// an arbitrary point off the divergence set.
struct PointVolume {
  double dim = 0.0;
  QuadResult phi;
  double log_volume = 0.0;
};

inline PointVolume log_volume_at(const VogelPoint& p, const Tolerance& tol = {}) {
  PointVolume out;
  out.phi = integrate_phi(p, tol);
  out.dim = dim_from_vogel(p);
  out.log_volume = out.dim * kLogVolumeBase - out.phi.value;
  return out;
}

/// Exact dimension from the table row, checked against the floating-point
/// evaluation and the root count.
inline std::int64_t checked_dimension(const SimpleLieType& type, const RootSystem& rs) {
  const VogelTableRow row = vogel_row(type);
  const Rational exact = dim_from_vogel(row);
  if (!exact.is_integer()) throw InvariantViolation("non-integral dimension for " + cartan_name(type));
  const double approx = dim_from_vogel(row.point());
  if (std::fabs(approx - exact.to_double()) > 1e-12 * std::fabs(exact.to_double()))
    throw InvariantViolation("floating dimension disagrees for " + cartan_name(type));
  if (exact.num() != rs.dimension())
    throw InvariantViolation("root count disagrees with universal dimension for " +
                             cartan_name(type));
  return exact.num();
}

inline std::string group_notes(const SimpleLieType& t) {
  if (t.family == Family::B || t.family == Family::D)
    return "Spin double cover: volume twice that of SO_" +
           std::to_string(t.family == Family::B ? 2 * t.rank + 1 : 2 * t.rank);
  return "";
}

/// Universal route with the Kac-Peterson value attached.
inline VolumeReport volume_universal(const SimpleLieType& type, const Tolerance& tol = {}) {
  const RootSystem rs = build_root_system(type);
  VolumeReport r;
  r.group = rs.lie_type;
  r.tolerance = tol;
  r.dim = checked_dimension(r.group, rs);
  const QuadResult q = integrate_phi(vogel_point(r.group), tol);
  r.phi_universal = q.value;
  r.phi_universal_error = q.error_estimate;
  r.converged = q.converged;
  r.phi_kp = phi_kp(rs);
  r.log_volume = static_cast<double>(r.dim) * kLogVolumeBase - r.phi_universal;
  r.volume = representable_volume(r.log_volume);
  r.route_discrepancy = std::fabs(r.phi_universal - r.phi_kp);
  r.notes = group_notes(r.group);
  if (!r.converged) r.failures.push_back("universal quadrature did not converge");
  return r;
}

/// ln Vol(SU_n) from the factorial closed form.
inline double volume_macdonald_sun(int n) {
  if (n < 2) throw DomainError("volume_macdonald_sun: requires n >= 2");
  const double nn = static_cast<double>(n) * n;
  CompensatedSum s;
  s.add(0.5 * (nn - 1.0) * std::numbers::ln2);
  s.add(0.5 * nn * std::log(static_cast<double>(n)));
  s.add(0.5 * (nn + n - 2.0) * std::log(2.0 * std::numbers::pi));
  s.add(-barnesG_integer_oracle(n).value);
  return s.value();
}

/// ln Vol(g / g_Z) implied by rearranging Macdonald's product
/// Vol(G) = Vol(g/g_Z) prod_i 2 pi^{m_i+1} / m_i!.
inline double implied_chevalley_covolume(double log_volume, const std::vector<int>& exps) {
  CompensatedSum s(log_volume);
  for (int m : exps) s.add(-(std::numbers::ln2 + (m + 1) * std::log(std::numbers::pi) -
                            std::lgamma(m + 1.0)));
  return s.value();
}

inline double implied_chevalley_covolume(const SimpleLieType& type, const Tolerance& tol = {}) {
  const VolumeReport r = volume_universal(type, tol);
  if (!r.converged) throw ConvergenceError("implied_chevalley_covolume: quadrature failed");
  return implied_chevalley_covolume(r.log_volume, exponents(r.group));
}

/// Runs every applicable route and checks pairwise agreement within
/// 10 tol.rel max(1, |Phi|).
inline VolumeReport cross_check(const SimpleLieType& type, const Tolerance& tol = {}) {
  VolumeReport r = volume_universal(type, tol);
  const double bound = 10.0 * tol.rel * std::max(1.0, std::fabs(r.phi_kp));
  auto compare = [&](const char* name, double x, double y) {
    if (!(std::fabs(x - y) <= bound)) {
      r.failures.push_back(std::string(name) + " disagree by " + std::to_string(std::fabs(x - y)));
    }
  };
  compare("universal/kac-peterson", r.phi_universal, r.phi_kp);
  if (r.group.family == Family::A) {
    const int n = r.group.rank + 1;
    r.phi_macdonald = static_cast<double>(r.dim) * kLogVolumeBase - volume_macdonald_sun(n);
    compare("universal/macdonald", r.phi_universal, *r.phi_macdonald);
    compare("kac-peterson/macdonald", r.phi_kp, *r.phi_macdonald);
  }
  r.agreed = true;
  for (const auto& f : r.failures)
    if (f.find("disagree") != std::string::npos) r.agreed = false;
  return r;
}

}  // namespace lievol
