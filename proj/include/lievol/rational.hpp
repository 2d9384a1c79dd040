#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lievol {

/// Exact fraction over 64-bit integers, always stored in lowest terms with a
/// positive denominator. Arithmetic throws std::overflow_error rather than
/// wrapping; the root-system data used here stays many orders of magnitude
/// below that limit.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }
  constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t lhs = mul(a.num_, b.den_ / g);
    const std::int64_t rhs = mul(b.num_, a.den_ / g);
    return Rational(add(lhs, rhs), mul(a.den_ / g, b.den_));
  }
  friend Rational operator-(const Rational& a) { return Rational(neg(a.num_), a.den_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t n = mul(g1 ? a.num_ / g1 : 0, g2 ? b.num_ / g2 : 0);
    const std::int64_t d = mul(a.den_ / (g2 ? g2 : 1), b.den_ / (g1 ? g1 : 1));
    return Rational(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return (a - b).num_ < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: overflow");
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: overflow");
    return r;
  }
  static std::int64_t neg(std::int64_t a) { return mul(a, -1); }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = neg(num_);
      den_ = neg(den_);
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Solves M x = b exactly by Gauss-Jordan elimination. M must be square and
/// nonsingular.
inline RationalVector solve_exact(RationalMatrix m, RationalVector b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw std::invalid_argument("solve_exact: size mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == Rational(0)) ++pivot;
    if (pivot == n) throw std::domain_error("solve_exact: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == Rational(0)) continue;
      const Rational f = m[row][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

}  // namespace lievol
