#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "lievol/errors.hpp"
#include "lievol/rational.hpp"
#include "lievol/rootsys.hpp"
#include "lievol/summation.hpp"

namespace lievol {

/// Projective triple (alpha : beta : gamma). Scaling all three by the same
/// nonzero factor, or permuting them, names the same point.
struct VogelPoint {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  constexpr double t() const { return alpha + beta + gamma; }
  constexpr std::array<double, 3> params() const { return {alpha, beta, gamma}; }
};

/// Compact group series as listed in the universal parameter table. Unlike
/// SimpleLieType this admits low-rank coincidences such as Spin_6 = SU_4,
/// which only the universal route can evaluate.
enum class Series { SU, Spin, Sp, G2, F4, E6, E7, E8 };

struct CompactGroup {
  Series series = Series::SU;
  /// SU_n, Spin_n, Sp_n (n even); ignored for exceptional series.
  int n = 0;

  friend bool operator==(const CompactGroup&, const CompactGroup&) = default;
};

inline std::string compact_group_name(const CompactGroup& g) {
  switch (g.series) {
    case Series::SU: return "SU_" + std::to_string(g.n);
    case Series::Spin: return "Spin_" + std::to_string(g.n);
    case Series::Sp: return "Sp_" + std::to_string(g.n);
    case Series::G2: return "G2";
    case Series::F4: return "F4";
    case Series::E6: return "E6";
    case Series::E7: return "E7";
    case Series::E8: return "E8";
  }
  return "?";
}

inline CompactGroup compact_group(const SimpleLieType& t) {
  switch (t.family) {
    case Family::A: return {Series::SU, t.rank + 1};
    case Family::B: return {Series::Spin, 2 * t.rank + 1};
    case Family::C: return {Series::Sp, 2 * t.rank};
    case Family::D: return {Series::Spin, 2 * t.rank};
    case Family::G2: return {Series::G2, 0};
    case Family::F4: return {Series::F4, 0};
    case Family::E6: return {Series::E6, 0};
    case Family::E7: return {Series::E7, 0};
    case Family::E8: return {Series::E8, 0};
  }
  throw InvalidTypeError("unknown family");
}

/// Inverse of compact_group(); throws InvalidTypeError for groups outside the
/// admitted Cartan presentations (e.g. Spin_6, which is D3).
inline SimpleLieType lie_type(const CompactGroup& g) {
  switch (g.series) {
    case Series::SU: return make_lie_type(Family::A, g.n - 1);
    case Series::Spin:
      return g.n % 2 ? make_lie_type(Family::B, (g.n - 1) / 2)
                     : make_lie_type(Family::D, g.n / 2);
    case Series::Sp:
      if (g.n % 2) throw InvalidTypeError("Sp_n requires even n");
      return make_lie_type(Family::C, g.n / 2);
    case Series::G2: return make_lie_type(Family::G2);
    case Series::F4: return make_lie_type(Family::F4);
    case Series::E6: return make_lie_type(Family::E6);
    case Series::E7: return make_lie_type(Family::E7);
    case Series::E8: return make_lie_type(Family::E8);
  }
  throw InvalidTypeError("unknown series");
}

/// A row of the parameter table in the alpha = -2 normalization, kept exact.
/// t equals the dual Coxeter number.
struct VogelTableRow {
  CompactGroup group;
  Rational alpha, beta, gamma;

  Rational t() const { return alpha + beta + gamma; }
  VogelPoint point() const { return {alpha.to_double(), beta.to_double(), gamma.to_double()}; }
};

inline VogelTableRow vogel_row(const CompactGroup& g) {
  const std::int64_t n = g.n;
  switch (g.series) {
    case Series::SU:
      if (n < 2) throw InvalidTypeError("SU_n requires n >= 2");
      return {g, -2, 2, n};
    case Series::Spin:
      if (n < 3 || n == 4) throw InvalidTypeError("Spin_n requires n = 3 or n >= 5");
      return {g, -2, 4, n - 4};
    case Series::Sp:
      if (n < 2 || n % 2) throw InvalidTypeError("Sp_n requires even n >= 2");
      return {g, -2, 1, n / 2 + 2};
    case Series::G2: return {g, -2, Rational(10, 3), Rational(8, 3)};
    case Series::F4: return {g, -2, 5, 6};
    case Series::E6: return {g, -2, 6, 8};
    case Series::E7: return {g, -2, 8, 12};
    case Series::E8: return {g, -2, 12, 20};
  }
  throw InvalidTypeError("unknown series");
}

inline VogelTableRow vogel_row(const SimpleLieType& t) { return vogel_row(compact_group(t)); }

inline VogelPoint vogel_point(const CompactGroup& g) { return vogel_row(g).point(); }
inline VogelPoint vogel_point(const SimpleLieType& t) { return vogel_row(t).point(); }

/// (alpha-2t)(beta-2t)(gamma-2t) / (alpha beta gamma), exact.
inline Rational dim_from_vogel(const Rational& a, const Rational& b, const Rational& c) {
  const Rational t = a + b + c;
  if (t == Rational(0)) throw DomainError("dim_from_vogel: t = 0");
  const Rational den = a * b * c;
  if (den == Rational(0)) throw DomainError("dim_from_vogel: alpha*beta*gamma = 0");
  return (a - 2 * t) * (b - 2 * t) * (c - 2 * t) / den;
}

inline Rational dim_from_vogel(const VogelTableRow& row) {
  return dim_from_vogel(row.alpha, row.beta, row.gamma);
}

inline double dim_from_vogel(const VogelPoint& p) {
  const double t = p.t();
  if (t == 0.0) throw DomainError("dim_from_vogel: t = 0");
  // Each factor (param - 2t)/param is scale invariant; the product of the
  // ratios is also symmetric, so sort to make permutations bit-identical.
  std::array<double, 3> q = p.params();
  std::sort(q.begin(), q.end());
  double d = 1.0;
  for (double v : q) {
    if (v == 0.0) throw DomainError("dim_from_vogel: alpha*beta*gamma = 0");
    d *= (v - 2.0 * t) / v;
  }
  return d;
}

/// True iff alpha/t, beta/t, gamma/t are all >= 0 (closed region).
inline bool in_divergence_set(const VogelPoint& p) {
  const double t = p.t();
  if (t == 0.0) throw DomainError("in_divergence_set: t = 0");
  return p.alpha / t >= 0.0 && p.beta / t >= 0.0 && p.gamma / t >= 0.0;
}

namespace detail {

// ln(sinh(u)/u), even in u, accurate for all finite u.
inline double log_sinhc(double u) {
  const double a = std::fabs(u);
  if (a < 1.0) {
    // sinh(u)/u - 1 = sum_{k>=1} u^{2k} / (2k+1)!
    const double u2 = a * a;
    double term = u2 / 6.0, s = 0.0;
    for (int k = 1; k < 30 && term > 1e-18 * s; ++k) {
      s += term;
      term *= u2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
    return std::log1p(s);
  }
  return a - std::log(2.0 * a) + std::log1p(-std::exp(-2.0 * a));
}

}  // namespace detail

/// Precomputed data for evaluating the universal generating function
/// F(x) = prod_i sinh(a_i x)/sinh(b_i x) - dim, with a_i = (p_i - 2t)/(4t),
/// b_i = p_i/(4t). Writing each ratio as (a_i/b_i) sinhc(a_i x)/sinhc(b_i x)
/// gives F = dim * expm1(D(x)), D = sum_i [ln sinhc(a_i x) - ln sinhc(b_i x)],
/// which has no cancellation near x = 0 and no overflow until D itself is
/// huge.
class UniversalGenerator {
 public:
  explicit UniversalGenerator(const VogelPoint& p) : point_(p) {
    const double t = p.t();
    if (t == 0.0) throw DomainError("universal generator: t = 0");
    std::array<double, 3> q = p.params();
    std::sort(q.begin(), q.end());
    double amax = 0.0;
    double s2 = 0.0, s4 = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (q[i] == 0.0) throw DomainError("universal generator: alpha*beta*gamma = 0");
      a_[i] = (q[i] - 2.0 * t) / (4.0 * t);
      b_[i] = q[i] / (4.0 * t);
      amax = std::max(amax, std::fabs(a_[i]));
      const double a2 = a_[i] * a_[i], b2 = b_[i] * b_[i];
      s2 += (a2 - b2) / 6.0;
      s4 -= (a2 * a2 - b2 * b2) / 180.0;
    }
    dim_ = dim_from_vogel(p);
    quad_coeff_ = dim_ * s2;
    quartic_coeff_ = dim_ * (s4 + 0.5 * s2 * s2);
    switch_point_ = 1e-3 / amax;
    // Decay of prod sinh ratios at large x: exp(x * sum(|a_i| - |b_i|)).
    growth_ = 0.0;
    for (int i = 0; i < 3; ++i) growth_ += std::fabs(a_[i]) - std::fabs(b_[i]);
  }

  const VogelPoint& point() const { return point_; }
  double dim() const { return dim_; }
  /// Below this |x| the Taylor form dim*(c2 x^2 + c4 x^4) is used.
  double switch_point() const { return switch_point_; }
  /// lim_{x->0} F(x)/x^2.
  double quadratic_coefficient() const { return quad_coeff_; }
  /// Exponential growth rate of the sinh product; the Phi integrand decays
  /// like exp(-(1 - growth) x).
  double growth_rate() const { return growth_; }

  /// D(x) = ln(prod / dim).
  double log_ratio(double x) const {
    CompensatedSum s;
    for (int i = 0; i < 3; ++i) {
      s.add(detail::log_sinhc(a_[i] * x));
      s.add(-detail::log_sinhc(b_[i] * x));
    }
    return s.value();
  }

  double taylor(double x) const {
    const double x2 = x * x;
    return x2 * (quad_coeff_ + quartic_coeff_ * x2);
  }

  /// F(x); even in x, F(0) = 0.
  double operator()(double x) const {
    if (dim_ == 0.0) return 0.0;
    if (std::fabs(x) < switch_point_) return taylor(x);
    const double d = log_ratio(x);
    const double f = dim_ * std::expm1(d);
    if (!std::isfinite(f)) {
      throw RangeError("F overflows at x = " + std::to_string(x) +
                           " (threshold near x = " +
                           std::to_string(overflow_threshold()) + ")",
                       x);
    }
    return f;
  }

  /// F(x) / (x (e^x - 1)), the Phi integrand; finite as x -> 0 and evaluated
  /// in log space where the sinh product would overflow.
  double phi_integrand(double x) const {
    if (dim_ == 0.0 || x == 0.0) {
      return x == 0.0 ? quad_coeff_ : 0.0;
    }
    if (std::fabs(x) < switch_point_) {
      return (quad_coeff_ + quartic_coeff_ * x * x) * (x / std::expm1(x));
    }
    const double d = log_ratio(x);
    if (d < 600.0 && x < 600.0) {
      return dim_ * std::expm1(d) / (x * std::expm1(x));
    }
    // prod/(x(e^x - 1)) - dim/(x(e^x - 1)) with e^x factored out.
    const double log_mag = std::log(std::fabs(dim_)) + d - x - std::log(x) -
                           std::log1p(-std::exp(-x));
    const double head = std::copysign(std::exp(log_mag), dim_);
    const double tail = x < 700.0 ? dim_ / (x * std::expm1(x)) : 0.0;
    return head - tail;
  }

  /// Approximate x beyond which dim * e^D(x) exceeds the double range.
  double overflow_threshold() const {
    const double log_max = std::log(std::numeric_limits<double>::max());
    if (growth_ <= 0.0) return std::numeric_limits<double>::infinity();
    return (log_max - std::log(std::fabs(dim_))) / growth_;
  }

 private:
  VogelPoint point_;
  std::array<double, 3> a_{}, b_{};
  double dim_ = 0.0;
  double quad_coeff_ = 0.0;
  double quartic_coeff_ = 0.0;
  double switch_point_ = 0.0;
  double growth_ = 0.0;
};

inline double F_eval(double x, const VogelPoint& p) { return UniversalGenerator(p)(x); }

/// sum over all roots of (e^{2<rho,mu> x} - 1) minus F(x) at the group's
/// table point. Each +/- pair is summed as 4 sinh^2(<rho,mu> x).
inline double key_relation_residual(const RootSystem& rs, double x) {
  const UniversalGenerator gen(vogel_point(rs.lie_type));
  CompensatedSum roots;
  for (const Rational& c : rho_pairings_killing(rs)) {
    const double s = std::sinh(c.to_double() * x);
    roots.add(4.0 * s * s);
  }
  const double lhs = roots.value();
  if (!std::isfinite(lhs)) throw RangeError("root sum overflows", x);
  return lhs - gen(x);
}

}  // namespace lievol
