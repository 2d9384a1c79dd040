#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "lievol/errors.hpp"
#include "lievol/summation.hpp"
#include "lievol/vogel.hpp"

namespace lievol {

struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-12;
  std::size_t max_evaluations = 2'000'000;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  std::size_t evaluations = 0;
  /// Upper truncation point; equals the right end for finite intervals.
  double tail_cutoff = 0.0;
};

using Integrand = std::function<double(double)>;

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Odd indices of the Kronrod nodes are the Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0, b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

inline double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw EvaluationError(x);
  return y;
}

inline Panel gauss_kronrod(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = checked(f, c);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[i];
    const double pair = checked(f, c - dx) + checked(f, c + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * h, std::fabs((kronrod - gauss) * h)};
}

// Global adaptive refinement: always bisect the panel with the largest error.
class AdaptiveIntegrator {
 public:
  AdaptiveIntegrator(const Integrand& f, const Tolerance& tol) : f_(f), tol_(tol) {}

  Panel add_interval(double a, double b) {
    const Panel p = gauss_kronrod(f_, a, b);
    push(p);
    evaluations_ += 15;
    return p;
  }

  // Refine until the summed error satisfies the tolerance. Returns false if
  // the evaluation budget ran out or panels became too narrow to split.
  bool refine() {
    while (error() > target()) {
      if (evaluations_ + 30 > tol_.max_evaluations) return false;
      const Panel worst = heap_.top();
      const double mid = 0.5 * (worst.a + worst.b);
      // Width is judged relative to |mid| so endpoint singularities at 0
      // can still be resolved.
      if (!(mid > worst.a && mid < worst.b) ||
          (worst.b - worst.a) < 64 * std::numeric_limits<double>::epsilon() * std::fabs(mid)) {
        return false;
      }
      heap_.pop();
      error_sum_ -= worst.error;
      value_sum_ -= worst.value;
      push(gauss_kronrod(f_, worst.a, mid));
      push(gauss_kronrod(f_, mid, worst.b));
      evaluations_ += 30;
      // Running sums drift; recompute from scratch now and then.
      if (++splits_ % 256 == 0) resum();
    }
    return true;
  }

  double value() const { return value_sum_; }
  double error() const { return std::max(0.0, error_sum_); }
  double target() const { return std::max(tol_.abs, tol_.rel * std::fabs(value_sum_)); }
  std::size_t evaluations() const { return evaluations_; }

  // Deterministic final sum: panels ordered by left endpoint.
  std::pair<double, double> final_sums() const {
    std::vector<Panel> panels;
    auto copy = heap_;
    while (!copy.empty()) {
      panels.push_back(copy.top());
      copy.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    CompensatedSum v, e;
    for (const auto& p : panels) {
      v.add(p.value);
      e.add(p.error);
    }
    return {v.value(), e.value()};
  }

 private:
  struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
  };

  void push(const Panel& p) {
    heap_.push(p);
    value_sum_ += p.value;
    error_sum_ += p.error;
  }

  void resum() {
    auto [v, e] = final_sums();
    value_sum_ = v;
    error_sum_ = e;
  }

  const Integrand& f_;
  Tolerance tol_;
  std::priority_queue<Panel, std::vector<Panel>, ByError> heap_;
  double value_sum_ = 0.0;
  double error_sum_ = 0.0;
  std::size_t evaluations_ = 0;
  std::size_t splits_ = 0;
};

}  // namespace detail

/// Adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
inline QuadResult integrate_finite(const Integrand& f, double a, double b,
                                   const Tolerance& tol = {}) {
  detail::AdaptiveIntegrator integ(f, tol);
  integ.add_interval(a, b);
  const bool ok = integ.refine();
  const auto [value, error] = integ.final_sums();
  QuadResult r;
  r.value = value;
  r.error_estimate = error;
  r.evaluations = integ.evaluations();
  r.converged = ok && std::isfinite(value) &&
                error <= std::max(tol.abs, tol.rel * std::fabs(value));
  r.tail_cutoff = b;
  return r;
}

/// Integral of f over [lower, inf). The range [lower, lower + scale] is
/// refined first; then panels [X, 2X] (relative to lower) are appended with
/// X doubling until a panel contributes less than tol.abs / 2. The magnitude of
/// the last panel is charged to the error estimate as truncation error.
inline QuadResult integrate_semiinfinite(const Integrand& f, const Tolerance& tol = {},
                                         double scale = 1.0, double lower = 0.0) {
  if (!(scale > 0.0)) throw DomainError("integrate_semiinfinite: scale must be positive");
  // Half the budget goes to the panels, half to the truncated tail.
  Tolerance inner = tol;
  inner.abs *= 0.5;
  inner.rel *= 0.5;
  detail::AdaptiveIntegrator integ(f, inner);
  double x = scale;
  integ.add_interval(lower, lower + x);
  bool ok = integ.refine();
  double truncation = 0.0;
  constexpr int kMaxDoublings = 60;
  bool tail_done = false;
  for (int k = 0; ok && k < kMaxDoublings; ++k) {
    const detail::Panel panel = integ.add_interval(lower + x, lower + 2 * x);
    ok = integ.refine();
    x *= 2;
    truncation = std::fabs(panel.value) + panel.error;
    if (truncation < inner.abs) {
      tail_done = true;
      break;
    }
  }
  const auto [value, error] = integ.final_sums();
  QuadResult r;
  r.value = value;
  r.error_estimate = error + truncation;
  r.evaluations = integ.evaluations();
  r.tail_cutoff = lower + x;
  r.converged = ok && tail_done && std::isfinite(value) &&
                r.error_estimate <= std::max(tol.abs, tol.rel * std::fabs(value));
  return r;
}

/// Phi(alpha, beta, gamma) = int_0^inf F(x) / (x (e^x - 1)) dx.
/// Refuses points of the divergence set.
inline QuadResult integrate_phi(const VogelPoint& p, const Tolerance& tol = {}) {
  if (p.t() == 0.0) throw DomainError("integrate_phi: t = 0");
  if (in_divergence_set(p)) throw DomainError("integral diverges on Δ");
  const UniversalGenerator gen(p);
  if (gen.dim() == 0.0) {
    QuadResult r;
    r.converged = true;
    r.tail_cutoff = 0.0;
    return r;
  }
  // The integrand decays like exp(-(1 - growth) x); on table points
  // 1 - growth = 1/t, so this is the 4t panel in projectively invariant form.
  const double decay = 1.0 - gen.growth_rate();
  const double scale = decay > 1e-6 ? 4.0 / decay : 1e6;
  const Integrand f = [&gen](double x) { return gen.phi_integrand(x); };
  return integrate_semiinfinite(f, tol, scale);
}

}  // namespace lievol
