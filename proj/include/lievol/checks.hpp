#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "lievol/quad.hpp"
#include "lievol/rootsys.hpp"
#include "lievol/special.hpp"
#include "lievol/vogel.hpp"
#include "lievol/volume.hpp"

namespace lievol {

struct CheckItem {
  std::string name;
  bool passed = false;
  /// Largest observed deviation (or 0 for exact checks).
  double deviation = 0.0;
  double bound = 0.0;
  std::string detail;
};

/// Groups in report order: A, B, C, D by rank, then G2, F4, E6, E7, E8.
/// Exceptionals are included when their rank does not exceed max_rank.
inline std::vector<SimpleLieType> supported_types(int max_rank = 8) {
  std::vector<SimpleLieType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back(make_lie_type(Family::A, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(make_lie_type(Family::B, r));
  for (int r = 1; r <= max_rank; ++r) out.push_back(make_lie_type(Family::C, r));
  for (int r = 4; r <= max_rank; ++r) out.push_back(make_lie_type(Family::D, r));
  for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8})
    if (exceptional_rank(f) <= max_rank) out.push_back(make_lie_type(f));
  return out;
}

inline int hardcoded_exceptional_dim(Family f) {
  switch (f) {
    case Family::G2: return 14;
    case Family::F4: return 52;
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
    default: return 0;
  }
}

inline CheckItem check_route_agreement(const SimpleLieType& t, const Tolerance& tol = {}) {
  const VolumeReport r = volume_universal(t, tol);
  CheckItem c;
  c.name = "route agreement " + group_name(t);
  c.deviation = r.route_discrepancy;
  c.bound = 1e-8 * std::max(1.0, std::fabs(r.phi_kp));
  c.passed = r.converged && c.deviation <= c.bound;
  c.detail = r.converged ? "" : "quadrature did not converge";
  return c;
}

/// |residual| <= 1e-9 dim at x in {0.1, 1, 5}. Takes the root system by
/// reference so a deliberately corrupted one can be checked.
inline CheckItem check_key_relation(const RootSystem& rs) {
  CheckItem c;
  c.name = "key relation " + group_name(rs.lie_type);
  const double dim = dim_from_vogel(vogel_point(rs.lie_type));
  c.bound = 1e-9 * dim;
  for (double x : {0.1, 1.0, 5.0})
    c.deviation = std::max(c.deviation, std::fabs(key_relation_residual(rs, x)));
  c.passed = c.deviation <= c.bound;
  return c;
}

inline CheckItem check_structure(const RootSystem& rs) {
  CheckItem c;
  c.name = "structure " + group_name(rs.lie_type);
  const VogelTableRow row = vogel_row(rs.lie_type);
  const auto& m = rs.exponents;
  const std::int64_t sum_m = std::accumulate(m.begin(), m.end(), std::int64_t{0});
  const Rational dim = dim_from_vogel(row);
  std::string why;
  if (sum_m != static_cast<std::int64_t>(rs.positive_roots.size()))
    why += "sum of exponents != |R+|; ";
  if (!(dim == Rational(rs.dimension()))) why += "rank + 2|R+| != universal dim; ";
  if (!(row.t() == Rational(rs.dual_coxeter))) why += "h^vee != table t; ";
  if (const int expected = hardcoded_exceptional_dim(rs.lie_type.family);
      expected && rs.dimension() != expected)
    why += "exceptional dimension mismatch; ";
  c.passed = why.empty();
  c.detail = why;
  return c;
}

inline CheckItem check_sun_closed_form(int n, const Tolerance& tol = {}) {
  const VolumeReport r = volume_universal(make_lie_type(Family::A, n - 1), tol);
  CheckItem c;
  c.name = "SU_" + std::to_string(n) + " closed form";
  c.deviation = std::fabs(r.log_volume - volume_macdonald_sun(n));
  c.bound = 1e-8 * std::max(1.0, std::fabs(r.log_volume));
  c.passed = r.converged && c.deviation <= c.bound;
  return c;
}

inline CheckItem check_barnes_oracle(int n, const Tolerance& tol = {}) {
  CheckItem c;
  c.name = "Barnes integral vs factorials n=" + std::to_string(n);
  c.deviation = std::fabs(log_barnesG_integral(n, tol).value - barnesG_integer_oracle(n).value);
  c.bound = 1e-9;
  c.passed = c.deviation <= c.bound;
  return c;
}

inline CheckItem check_unitary_line(double z, const Tolerance& tol = {}) {
  char label[48];
  std::snprintf(label, sizeof label, "unitary line z=%g", z);
  CheckItem c;
  c.name = label;
  const QuadResult q = integrate_phi({-2.0, 2.0, z}, tol);
  c.deviation = std::fabs(q.value - psi_unitary(z, tol).value);
  if (z == std::floor(z)) {
    const double via_oracle = psi_unitary(z, tol, BarnesSource::oracle_at_integers).value;
    c.deviation = std::max(c.deviation, std::fabs(q.value - via_oracle));
  }
  c.bound = 1e-7;
  c.passed = q.converged && c.deviation <= c.bound;
  return c;
}

inline CheckItem check_isomorphism(const std::string& name, const VogelPoint& a,
                                   const VogelPoint& b, const Tolerance& tol = {}) {
  CheckItem c;
  c.name = "isomorphism " + name;
  const PointVolume va = log_volume_at(a, tol), vb = log_volume_at(b, tol);
  c.deviation = std::fabs(va.log_volume - vb.log_volume);
  c.bound = 1e-8;
  c.passed = va.phi.converged && vb.phi.converged && c.deviation <= c.bound;
  return c;
}

/// Full invariant suite in deterministic order.
inline std::vector<CheckItem> run_checks(int max_rank = 8, const Tolerance& tol = {}) {
  std::vector<CheckItem> items;
  const auto types = supported_types(max_rank);
  for (const auto& t : types) items.push_back(check_structure(build_root_system(t)));
  for (const auto& t : types) items.push_back(check_route_agreement(t, tol));
  for (const auto& t : types) items.push_back(check_key_relation(build_root_system(t)));
  for (int n = 2; n <= max_rank + 1; ++n) items.push_back(check_sun_closed_form(n, tol));
  for (int n = 1; n <= 8; ++n) items.push_back(check_barnes_oracle(n, tol));
  for (double z : {0.5, 1.0, 2.0, 3.0, 5.5, 9.0}) items.push_back(check_unitary_line(z, tol));
  items.push_back(check_isomorphism("Sp_2 = SU_2", vogel_point(CompactGroup{Series::Sp, 2}),
                                    vogel_point(CompactGroup{Series::SU, 2}), tol));
  items.push_back(check_isomorphism("Spin_6 = SU_4", vogel_point(CompactGroup{Series::Spin, 6}),
                                    vogel_point(CompactGroup{Series::SU, 4}), tol));
  return items;
}

}  // namespace lievol
