#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lievol/errors.hpp"
#include "lievol/quad.hpp"
#include "lievol/summation.hpp"

namespace lievol {

enum class Method { integral, oracle, closed_form };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::integral: return "integral";
    case Method::oracle: return "oracle";
    case Method::closed_form: return "closed_form";
  }
  return "?";
}

struct SpecialValue {
  double value = 0.0;
  Method method = Method::integral;
  double error_estimate = 0.0;
};

namespace detail {

inline SpecialValue from_quad(const QuadResult& q, const char* what, double extra = 0.0) {
  if (!q.converged) {
    throw ConvergenceError(std::string(what) + ": quadrature did not converge (estimate " +
                           std::to_string(q.value) + ", error " +
                           std::to_string(q.error_estimate) + ")");
  }
  return {q.value + extra, Method::integral, q.error_estimate};
}

// [e^{-zx} + z(1 - e^{-x}) - 1] / (x (e^x - 1))
inline double malmsten_integrand(double z, double x) {
  if (x == 0.0) return 0.5 * (z * z - z);
  if (x * std::max(1.0, std::fabs(z)) < 0.5) {
    // numerator / x^2 = sum_{k>=2} (-x)^{k-2} (z^k - z) / k!
    CompensatedSum s;
    double zk = z, xk = 1.0, fact = 1.0;
    for (int k = 2; k < 40; ++k) {
      zk *= z;
      fact *= k;
      const double term = xk * (zk - z) / fact;
      s.add(term);
      if (k > 4 && std::fabs(term) < 1e-19 * std::fabs(s.value())) break;
      xk *= -x;
    }
    return s.value() * (x / std::expm1(x));
  }
  if (x < 30.0) {
    return (std::expm1(-z * x) - z * std::expm1(-x)) / (x * std::expm1(x));
  }
  const double em = std::exp(-x);
  return (std::exp(-(z + 1.0) * x) + (z * (1.0 - em) - 1.0) * em) / ((1.0 - em) * x);
}

// Taylor coefficients of y^2 / (1 - e^{-y})^2 about y = 0.
inline constexpr int kBarnesTerms = 18;

inline std::array<double, kBarnesTerms> barnes_kernel_series() {
  // (1 - e^{-y}) / y = sum_k (-1)^k y^k / (k+1)!
  std::array<double, kBarnesTerms> q{}, inv{}, sq{};
  double fact = 1.0;
  for (int k = 0; k < kBarnesTerms; ++k) {
    fact *= (k + 1);
    q[k] = (k % 2 ? -1.0 : 1.0) / fact;
  }
  inv[0] = 1.0;
  for (int n = 1; n < kBarnesTerms; ++n) {
    double s = 0.0;
    for (int k = 1; k <= n; ++k) s += q[k] * inv[n - k];
    inv[n] = -s;
  }
  for (int n = 0; n < kBarnesTerms; ++n) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += inv[k] * inv[n - k];
    sq[n] = s;
  }
  return sq;
}

/// Integrand of the log Barnes G representation,
/// h(y) = [e^{-(z+1)y}/(1-e^{-y})^2 - 1/y^2 + z/y - (e^{-y}/2)(z^2 - 1/6)] / y,
/// with a power-series branch below y = 0.5/(z+1) where the three singular
/// terms cancel.
class BarnesIntegrand {
 public:
  explicit BarnesIntegrand(double z) : z_(z) {
    const double s = z + 1.0;
    const auto d = barnes_kernel_series();
    // e^{-sy} / (1-e^{-y})^2 = y^{-2} sum_n e_n y^n
    std::array<double, kBarnesTerms> e{};
    for (int n = 0; n < kBarnesTerms; ++n) {
      double pw = 1.0, sum = 0.0;
      for (int j = 0; j <= n; ++j) {
        sum += d[n - j] * pw;
        pw *= -s / (j + 1);
      }
      e[n] = sum;
    }
    // h(y) = sum_{m>=1} [e_{m+2} - (1/2)(z^2 - 1/6)(-1)^m / m!] y^{m-1}
    const double c = 0.5 * (z * z - 1.0 / 6.0);
    double fact = 1.0;
    for (int m = 1; m + 2 < kBarnesTerms; ++m) {
      fact *= m;
      coeff_[m - 1] = e[m + 2] - c * (m % 2 ? -1.0 : 1.0) / fact;
    }
    switch_point_ = 0.5 / s;
  }

  double switch_point() const { return switch_point_; }

  double series(double y) const {
    double acc = 0.0;
    for (int k = kCoeffs - 1; k >= 0; --k) acc = acc * y + coeff_[k];
    return acc;
  }

  double direct(double y) const {
    const double om = -std::expm1(-y);
    const double head = std::exp(-(z_ + 1.0) * y) / (om * om);
    const double bracket =
        head - 1.0 / (y * y) + z_ / y - 0.5 * std::exp(-y) * (z_ * z_ - 1.0 / 6.0);
    return bracket / y;
  }

  double operator()(double y) const { return y < switch_point_ ? series(y) : direct(y); }

  /// The exponentially decaying part of h, used beyond y = 1 where the
  /// algebraic terms -1/y^3 + z/y^2 are integrated in closed form.
  double exponential_part(double y) const {
    const double om = -std::expm1(-y);
    return (std::exp(-(z_ + 1.0) * y) / (om * om) - 0.5 * std::exp(-y) * (z_ * z_ - 1.0 / 6.0)) /
           y;
  }

 private:
  static constexpr int kCoeffs = kBarnesTerms - 3;
  double z_;
  std::array<double, kCoeffs> coeff_{};
  double switch_point_ = 0.0;
};

}  // namespace detail

/// ln Gamma(1 + z) from Malmsten's integral, z > -1.
inline SpecialValue log_gamma_malmsten(double z, const Tolerance& tol = {}) {
  if (!(z > -1.0)) throw DomainError("log_gamma_malmsten: requires z > -1");
  if (z == 0.0) return {0.0, Method::integral, 0.0};
  const Integrand f = [z](double x) { return detail::malmsten_integrand(z, x); };
  const double decay = std::min(1.0, 1.0 + z);
  return detail::from_quad(integrate_semiinfinite(f, tol, 4.0 / decay), "log_gamma_malmsten");
}

/// sin(pi x)/(pi x) - 1/(Gamma(1-x) Gamma(1+x)), with both Gammas from
/// Malmsten's integral.
inline double euler_reflection_residual(double x, const Tolerance& tol = {}) {
  if (!(std::fabs(x) < 1.0)) throw DomainError("euler_reflection_residual: requires |x| < 1");
  if (x == 0.0) return 0.0;
  const double px = std::numbers::pi * x;
  const double lhs = std::sin(px) / px;
  const double lg = log_gamma_malmsten(-x, tol).value + log_gamma_malmsten(x, tol).value;
  return lhs - std::exp(-lg);
}

/// ln G(n + 1) = sum_{k=1}^{n-1} ln k!, exact integer product while it fits
/// in 128 bits, log-space sum sum_{j=1}^{n-1} (n - j) ln j beyond.
inline SpecialValue barnesG_integer_oracle(int n) {
  if (n < 1) throw DomainError("barnesG_integer_oracle: requires n >= 1");
  unsigned __int128 product = 1, fact = 1;
  bool fits = true;
  for (int k = 2; k <= n - 1 && fits; ++k) {
    fits = !__builtin_mul_overflow(fact, static_cast<unsigned __int128>(k), &fact) &&
           !__builtin_mul_overflow(product, fact, &product);
  }
  if (fits) {
    return {static_cast<double>(std::log(static_cast<long double>(product))), Method::oracle,
            0.0};
  }
  CompensatedSum s;
  for (int j = 2; j <= n - 1; ++j) s.add((n - j) * std::log(static_cast<double>(j)));
  return {s.value(), Method::oracle, 0.0};
}

/// zeta'(-1) = 1/12 - ln A, A the Glaisher-Kinkelin constant.
inline constexpr double kZetaPrimeMinusOne = -0.16542114370045092921;

/// J(z) = int_0^inf h(y) dy with h the Barnes integrand. The range is split
/// at y = 1 and the algebraic tail int_1^inf (z/y^2 - 1/y^3) dy = z - 1/2 is
/// added exactly.
inline SpecialValue barnes_integral(double z, const Tolerance& tol = {}) {
  const detail::BarnesIntegrand h(z);
  const Integrand near = [&h](double y) { return h(y); };
  const Integrand far = [&h](double y) { return h.exponential_part(y); };
  Tolerance half = tol;
  half.abs *= 0.5;
  half.rel *= 0.5;
  const QuadResult head = integrate_finite(near, 0.0, 1.0, half);
  const QuadResult tail = integrate_semiinfinite(far, half, 4.0, 1.0);
  if (!head.converged || !tail.converged)
    throw ConvergenceError("barnes_integral: quadrature did not converge");
  CompensatedSum j;
  j.add(head.value).add(tail.value).add(z - 0.5);
  return {j.value(), Method::integral, head.error_estimate + tail.error_estimate};
}

/// ln G(z + 1) = (z/2) ln 2pi + zeta'(-1) - J(z), so that G(1) = 1.
inline SpecialValue log_barnesG_integral(double z, const Tolerance& tol = {}) {
  if (!(z >= 0.0)) throw DomainError("log_barnesG_integral: requires z >= 0");
  const SpecialValue j = barnes_integral(z, tol);
  const double value =
      0.5 * z * std::log(2.0 * std::numbers::pi) + kZetaPrimeMinusOne - j.value;
  return {value, Method::integral, j.error_estimate};
}

enum class BarnesSource { integral, oracle_at_integers };

/// Psi(z) = ln G(z+1) - (1/2) z^2 ln z + (1/2)(z^2 - z) ln 2pi, the closed
/// form of Phi on the line (-2, 2, z).
inline SpecialValue psi_unitary(double z, const Tolerance& tol = {},
                                BarnesSource source = BarnesSource::integral) {
  if (!(z > 0.0)) throw DomainError("psi_unitary: requires z > 0");
  SpecialValue g;
  const bool integer = z == std::floor(z) && z < 1e6;
  if (source == BarnesSource::oracle_at_integers && integer) {
    g = barnesG_integer_oracle(static_cast<int>(z));
  } else {
    g = log_barnesG_integral(z, tol);
  }
  const double value = g.value - 0.5 * z * z * std::log(z) +
                       0.5 * (z * z - z) * std::log(2.0 * std::numbers::pi);
  return {value, g.method == Method::oracle ? Method::oracle : Method::closed_form,
          g.error_estimate};
}

}  // namespace lievol
