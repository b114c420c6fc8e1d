#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fracwave/gamma_fn.hpp"
#include "fracwave/time_grid.hpp"

namespace fracwave {

/// Fractional order alpha > 0 for the Riemann-Liouville integrals.
struct FracOrder {
  double alpha;
  explicit FracOrder(double a) : alpha(a) {
    if (!(a > 0.0) || !std::isfinite(a))
      throw std::invalid_argument("FracOrder: order must be positive");
  }
};

/// Weights of the piecewise-linear product rule for the kernel
/// (t-s)^{alpha-1} on a uniform grid. On the panel [t_j, t_{j+1}] seen from
/// node t_i (lag c = i-j), the panel contributes
///     h^alpha * (a[c-1]*f_j + b[c-1]*f_{j+1})
/// to Gamma(alpha) * I^alpha f(t_i). The kernel moments are integrated
/// exactly per panel, so the singular kernel is never sampled pointwise and
/// all weights are nonnegative.
class ProductTrapWeights {
 public:
  ProductTrapWeights(double alpha, int n_panels) : alpha_(alpha) { extend(n_panels); }

  double a(int c) const { return a_[static_cast<std::size_t>(c - 1)]; }
  double b(int c) const { return b_[static_cast<std::size_t>(c - 1)]; }
  int panels() const { return static_cast<int>(a_.size()); }
  double alpha() const { return alpha_; }

  void extend(int n_panels) {
    for (int c = panels() + 1; c <= n_panels; ++c) {
      const double p = pow_diff(c, alpha_ + 1.0) / (alpha_ + 1.0);
      const double q = pow_diff(c, alpha_) / alpha_;
      a_.push_back(p - (c - 1) * q);
      b_.push_back(c * q - p);
    }
  }

 private:
  // c^e - (c-1)^e without cancellation (c can reach ~1e5 with e up to 5).
  static double pow_diff(int c, double e) {
    if (c == 1) return 1.0;
    const double lc = static_cast<double>(c);
    return -std::pow(lc, e) * std::expm1(e * std::log1p(-1.0 / lc));
  }

  double alpha_;
  std::vector<double> a_, b_;
};

/// Left Riemann-Liouville integral (1/Gamma(a)) int_0^t (t-s)^{a-1} f(s) ds
/// at every node; value at t = 0 is 0.
inline TimeSeries rl_left(const TimeSeries& f, FracOrder alpha) {
  const int n = f.grid.n_steps;
  const ProductTrapWeights w(alpha.alpha, n);
  const double pref =
      std::pow(f.grid.h, alpha.alpha) / gamma_fn(alpha.alpha);
  std::vector<double> out(static_cast<std::size_t>(n + 1), 0.0);
  for (int i = 1; i <= n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < i; ++j) {
      const int c = i - j;
      acc += w.a(c) * f[j] + w.b(c) * f[j + 1];
    }
    out[static_cast<std::size_t>(i)] = pref * acc;
  }
  return TimeSeries(f.grid, std::move(out));
}

/// Left integral evaluated at the final node only (O(n) instead of O(n^2)).
inline double rl_left_at_end(const TimeSeries& f, FracOrder alpha) {
  const int n = f.grid.n_steps;
  const ProductTrapWeights w(alpha.alpha, n);
  const double pref = std::pow(f.grid.h, alpha.alpha) / gamma_fn(alpha.alpha);
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const int c = n - j;
    acc += w.a(c) * f[j] + w.b(c) * f[j + 1];
  }
  return pref * acc;
}

/// Right Riemann-Liouville integral (1/Gamma(a)) int_t^T (s-t)^{a-1} f(s) ds;
/// value at t = T is 0. Implemented as time reversal of the left rule, which
/// keeps the exact-moment property.
inline TimeSeries rl_right(const TimeSeries& f, FracOrder alpha) {
  std::vector<double> rev(f.values.rbegin(), f.values.rend());
  TimeSeries g = rl_left(TimeSeries(f.grid, std::move(rev)), alpha);
  std::vector<double> out(g.values.rbegin(), g.values.rend());
  return TimeSeries(f.grid, std::move(out));
}

/// Exact right integral of the power profile (1 - t/T)^{l-(3-gamma)}:
///   tI_T^beta (1-t/T)^nu = (Gamma(nu+1)/Gamma(nu+beta+1)) T^beta (1-t/T)^{nu+beta}
/// with nu = l + gamma - 3, i.e. Gamma(l+gamma-2)/Gamma(l+gamma+beta-2) in
/// the paper-facing parameters. Used as the oracle for rl_right.
inline TimeSeries rl_power_closed_form(double l, double gamma_exp, FracOrder beta,
                                       const TimeGrid& grid) {
  const double nu = l - (3.0 - gamma_exp);
  if (!(nu + beta.alpha > -1.0))
    throw std::invalid_argument(
        "rl_power_closed_form: l - (3-gamma) + beta must exceed -1");
  if (is_gamma_pole(nu + 1.0) || is_gamma_pole(nu + beta.alpha + 1.0))
    throw std::domain_error("rl_power_closed_form: Gamma pole in coefficients");
  const double coef = gamma_fn(nu + 1.0) / gamma_fn(nu + beta.alpha + 1.0) *
                      std::pow(grid.horizon(), beta.alpha);
  std::vector<double> out(static_cast<std::size_t>(grid.size()));
  const double T = grid.horizon();
  for (int i = 0; i <= grid.n_steps; ++i) {
    const double rem = 1.0 - grid.node(i) / T;
    out[static_cast<std::size_t>(i)] =
        (i == grid.n_steps) ? 0.0 : coef * std::pow(rem, nu + beta.alpha);
  }
  return TimeSeries(grid, std::move(out));
}

/// Max-norm residual of the semigroup identity I^a I^b f = I^{a+b} f,
/// evaluated for the left pair and the right pair; the larger one is returned.
inline double check_semigroup(const TimeSeries& f, FracOrder alpha, FracOrder beta) {
  const FracOrder ab(alpha.alpha + beta.alpha);
  const double left = max_abs_diff(rl_left(rl_left(f, alpha), beta), rl_left(f, ab));
  const double right = max_abs_diff(rl_right(rl_right(f, alpha), beta), rl_right(f, ab));
  return std::max(left, right);
}

/// | int_0^T (0I_t^a f) g dt - int_0^T (tI_T^a g) f dt | with trapezoidal
/// outer quadrature.
inline double check_adjoint(const TimeSeries& f, const TimeSeries& g, FracOrder alpha) {
  if (!(f.grid == g.grid))
    throw std::invalid_argument("check_adjoint: f and g live on different grids");
  const TimeSeries lf = rl_left(f, alpha);
  const TimeSeries rg = rl_right(g, alpha);
  std::vector<double> prod1(static_cast<std::size_t>(f.size()));
  std::vector<double> prod2(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) {
    prod1[static_cast<std::size_t>(i)] = lf[i] * g[i];
    prod2[static_cast<std::size_t>(i)] = rg[i] * f[i];
  }
  return std::abs(trapezoid(TimeSeries(f.grid, std::move(prod1))) -
                  trapezoid(TimeSeries(f.grid, std::move(prod2))));
}

/// Laplace-transform identity L(0I_t^a e^{lambda .})(s) = s^{-a}/(s - lambda).
/// Returns {numeric transform of the quadrature series, closed form}. The
/// horizon is chosen so both the forcing e^{lambda t} and the transform
/// weight e^{-s t} have decayed to 1e-12 of their peaks before truncation.
inline std::pair<double, double> laplace_check_exp(FracOrder alpha, double lambda,
                                                   double s) {
  if (!(lambda < 0.0))
    throw std::invalid_argument("laplace_check_exp: lambda must be negative");
  if (!(s > 0.0)) throw std::invalid_argument("laplace_check_exp: s must be positive");
  const double decade12 = std::log(1e12);
  const double T = std::max(decade12 / -lambda, decade12 / s);
  const int n = static_cast<int>(std::ceil(T / 0.01));
  const TimeGrid grid(n, T / n);
  const TimeSeries f = TimeSeries::sample(grid, [&](double t) { return std::exp(lambda * t); });
  const TimeSeries If = rl_left(f, alpha);
  std::vector<double> integrand(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i)
    integrand[static_cast<std::size_t>(i)] = std::exp(-s * grid.node(i)) * If[i];
  const double numeric = trapezoid(TimeSeries(grid, std::move(integrand)));
  const double exact = std::pow(s, -alpha.alpha) / (s - lambda);
  return {numeric, exact};
}

}  // namespace fracwave
