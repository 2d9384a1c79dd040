#pragma once

#include <cmath>

namespace lievol {

// Neumaier's variant of Kahan summation. Order of add() calls fixes the
// result bit for bit.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  CompensatedSum& add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator+=(double v) { return add(v); }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace lievol
