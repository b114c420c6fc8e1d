#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fracwave/frac_integral.hpp"
#include "fracwave/gamma_fn.hpp"
#include "fracwave/time_grid.hpp"

namespace fracwave {

/// Parameter bundle of the integral inequality
///   w + b*I^1 w + c*I^2 w - A - B t >= a * I^{3-gamma} |w|^p.
/// Hypotheses: a > 0, c > 0, b^2 - 4c > 0, gamma < 1, p > 1.
struct InequalityParams {
  double A, B, a, b, c, gamma, p;

  InequalityParams(double A_, double B_, double a_, double b_, double c_,
                   double gamma_, double p_)
      : A(A_), B(B_), a(a_), b(b_), c(c_), gamma(gamma_), p(p_) {
    if (!(a > 0.0)) throw std::invalid_argument("InequalityParams: requires a > 0");
    if (!(c > 0.0)) throw std::invalid_argument("InequalityParams: requires c > 0");
    if (!(b * b - 4.0 * c > 0.0))
      throw std::invalid_argument("InequalityParams: requires b^2 - 4c > 0");
    if (!(gamma < 1.0)) throw std::invalid_argument("InequalityParams: requires gamma < 1");
    if (!(p > 1.0)) throw std::invalid_argument("InequalityParams: requires p > 1");
  }

  double lambda1() const { return 0.5 * (-b - std::sqrt(b * b - 4.0 * c)); }
  double lambda2() const { return 0.5 * (-b + std::sqrt(b * b - 4.0 * c)); }
};

struct CertificateReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double l_used = 0.0;
  double T_used = 0.0;
};

/// Marches the second-kind equation w + b*I^1 w + c*I^2 w = A + B t + f(t)
/// node by node. I^1 is the running trapezoid and I^2 its running trapezoid,
/// so the scalar diagonal at each node is 1 + b h/2 + c h^2/4.
inline TimeSeries solve_linear_volterra(const InequalityParams& params,
                                        const TimeSeries& f) {
  const TimeGrid grid = f.grid;
  const double h = grid.h;
  const double diag = 1.0 + params.b * h / 2.0 + params.c * h * h / 4.0;
  if (!(diag > 0.0))
    throw std::runtime_error(
        "solve_linear_volterra: step too large, diagonal 1 + b h/2 + c h^2/4 "
        "is not positive");

  std::vector<double> w(static_cast<std::size_t>(grid.size()), 0.0);
  w[0] = params.A + f[0];
  double P = 0.0;  // I^1 w at the previous node
  double Q = 0.0;  // I^2 w (as I^1 of P) at the previous node
  double w_prev = w[0];
  for (int i = 1; i <= grid.n_steps; ++i) {
    const double P_known = P + 0.5 * h * w_prev;
    const double Q_known = Q + 0.5 * h * (P + P_known);
    const double rhs = params.A + params.B * grid.node(i) + f[i] -
                       params.b * P_known - params.c * Q_known;
    const double wi = rhs / diag;
    const double Pi = P_known + 0.5 * h * wi;
    const double Qi = Q_known + 0.25 * h * h * wi;
    w[static_cast<std::size_t>(i)] = wi;
    P = Pi;
    Q = Qi;
    w_prev = wi;
  }
  return TimeSeries(grid, std::move(w));
}

/// Laplace-inversion closed form for v = I^2 w of the equality case:
///   v(t) = (l2-l1)^{-1} [ A I^1(e^{l2 t} - e^{l1 t}) + B I^2(e^{l2 t} - e^{l1 t})
///          + int_0^t (e^{l2(t-s)} - e^{l1(t-s)}) f(s) ds ].
/// The exponential integrals use exact antiderivatives; the convolution uses
/// the trapezoid with tabulated kernel values.
inline TimeSeries closed_form_v(const InequalityParams& params, const TimeSeries& f) {
  const TimeGrid grid = f.grid;
  const double l1 = params.lambda1();
  const double l2 = params.lambda2();
  const double den = l2 - l1;
  const int n = grid.n_steps;
  const double h = grid.h;

  auto I1exp = [](double lam, double t) { return std::expm1(lam * t) / lam; };
  auto I2exp = [](double lam, double t) {
    return (std::expm1(lam * t) - lam * t) / (lam * lam);
  };

  // kernel tables e^{lam * k h}
  std::vector<double> e1(static_cast<std::size_t>(n + 1)), e2(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    e1[static_cast<std::size_t>(k)] = std::exp(l1 * k * h);
    e2[static_cast<std::size_t>(k)] = std::exp(l2 * k * h);
  }

  std::vector<double> out(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    const double t = grid.node(i);
    double conv = 0.0;
    if (i > 0) {
      conv += 0.5 * ((e2[static_cast<std::size_t>(i)] - e1[static_cast<std::size_t>(i)]) * f[0] +
                     (e2[0] - e1[0]) * f[i]);
      for (int j = 1; j < i; ++j)
        conv += (e2[static_cast<std::size_t>(i - j)] - e1[static_cast<std::size_t>(i - j)]) * f[j];
      conv *= h;
    }
    out[static_cast<std::size_t>(i)] =
        (params.A * (I1exp(l2, t) - I1exp(l1, t)) +
         params.B * (I2exp(l2, t) - I2exp(l1, t)) + conv) /
        den;
  }
  return TimeSeries(grid, std::move(out));
}

/// The three normalized quantities of the exponential asymptotics,
///   ( I^1 e^{lam t},  t^{-1} I^2 e^{lam t},  t^{gamma-2} I^{3-gamma} e^{lam t} ),
/// computed by the product quadrature at the single node t. Their t -> inf
/// limits are (-1/lam, -1/lam, -1/(lam Gamma(3-gamma))).
inline std::array<double, 3> exp_frac_integral_limits(double lambda, double gamma_exp,
                                                      double t) {
  if (!(lambda < 0.0))
    throw std::invalid_argument("exp_frac_integral_limits: lambda must be negative");
  if (!(gamma_exp < 1.0))
    throw std::invalid_argument("exp_frac_integral_limits: gamma must be < 1");
  if (!(t > 0.0)) throw std::invalid_argument("exp_frac_integral_limits: t must be positive");
  const int n = std::max(1000, static_cast<int>(std::ceil(t / 0.005)));
  const TimeGrid grid(n, t / n);
  const TimeSeries f =
      TimeSeries::sample(grid, [&](double s) { return std::exp(lambda * s); });
  const double i1 = rl_left_at_end(f, FracOrder(1.0));
  const double i2 = rl_left_at_end(f, FracOrder(2.0));
  const double i3 = rl_left_at_end(f, FracOrder(3.0 - gamma_exp));
  return {i1, i2 / t, std::pow(t, gamma_exp - 2.0) * i3};
}

/// Both sides of the weighted certificate derived from the test function
/// psi_T = (1-t/T)^l. LHS is
///   (a/2) int |w|^p psi_T + A (G(l+1)/G(l+gamma-1)) T^{gamma-2}
///                        + B (G(l+1)/G(l+gamma))   T^{gamma-1};
/// RHS is C (T^{1-p'(3-gamma)} + T^{1-p'(2-gamma)} + T^{1-p'(1-gamma)}) with
/// p' = p/(p-1) and C assembled from the Young-inequality bookkeeping
/// (epsilon = a/6 per term, Holder exponents explicit).
inline CertificateReport certify_bound_i(const TimeSeries& w,
                                         const InequalityParams& params, double l) {
  const double p = params.p;
  const double gamma_exp = params.gamma;
  const double pp = p / (p - 1.0);
  if (!(l > p * (3.0 - gamma_exp) / (p - 1.0)))
    throw std::invalid_argument("certify_bound_i: requires l > p(3-gamma)/(p-1)");

  const TimeGrid grid = w.grid;
  const double T = grid.horizon();

  std::vector<double> integrand(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i) {
    const double psi = std::pow(1.0 - grid.node(i) / T, l);
    integrand[static_cast<std::size_t>(i)] = std::pow(std::abs(w[i]), p) * psi;
  }
  const double weighted = trapezoid(TimeSeries(grid, std::move(integrand)));

  const double lhs = 0.5 * params.a * weighted +
                     params.A * gamma_ratio(l + 1.0, l + gamma_exp - 1.0) *
                         std::pow(T, gamma_exp - 2.0) +
                     params.B * gamma_ratio(l + 1.0, l + gamma_exp) *
                         std::pow(T, gamma_exp - 1.0);

  // Young: x y <= eps x^p + C_eps y^{p'}, C_eps = (eps p)^{-p'/p} / p'.
  const double eps = params.a / 6.0;
  const double c_young = std::pow(eps * p, -pp / p) / pp;
  const double coef1 = std::pow(gamma_ratio(l + 1.0, l + gamma_exp - 2.0), pp) /
                       (l - pp * (3.0 - gamma_exp) + 1.0);
  const double coef2 =
      std::pow(std::abs(params.b) * gamma_ratio(l + 1.0, l + gamma_exp - 1.0), pp) /
      (l - pp * (2.0 - gamma_exp) + 1.0);
  const double coef3 =
      std::pow(params.c * gamma_ratio(l + 1.0, l + gamma_exp), pp) /
      (l - pp * (1.0 - gamma_exp) + 1.0);
  const double C = c_young * std::max(coef1, std::max(coef2, coef3));
  const double rhs = C * (std::pow(T, 1.0 - pp * (3.0 - gamma_exp)) +
                          std::pow(T, 1.0 - pp * (2.0 - gamma_exp)) +
                          std::pow(T, 1.0 - pp * (1.0 - gamma_exp)));

  CertificateReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.satisfied = lhs <= rhs;
  rep.l_used = l;
  rep.T_used = T;
  return rep;
}

/// (LHS, RHS) of the weighted Hardy estimate
///   ( int t^{-2p} |I^2 w|^p )^{1/p} <= (G(1-1/p)/G(3-1/p)) ( int |w|^p )^{1/p}
/// on the finite horizon. The weighted integrand starts at the first node,
/// which only weakens the left side.
inline std::pair<double, double> weighted_hardy_check(const TimeSeries& w, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("weighted_hardy_check: requires p > 1");
  const TimeGrid grid = w.grid;
  const TimeSeries i2 = rl_left(w, FracOrder(2.0));

  double lhs_p = 0.0;
  for (int i = 1; i <= grid.n_steps; ++i) {
    const double t = grid.node(i);
    const double val = std::pow(t, -2.0 * p) * std::pow(std::abs(i2[i]), p);
    const double wgt = (i == 1 || i == grid.n_steps) ? 0.5 : 1.0;
    lhs_p += wgt * val;
  }
  lhs_p *= grid.h;

  std::vector<double> wp(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i)
    wp[static_cast<std::size_t>(i)] = std::pow(std::abs(w[i]), p);
  const double rhs_p = trapezoid(TimeSeries(grid, std::move(wp)));

  const double constant = gamma_fn(1.0 - 1.0 / p) / gamma_fn(3.0 - 1.0 / p);
  return {std::pow(lhs_p, 1.0 / p), constant * std::pow(rhs_p, 1.0 / p)};
}

/// Hardy constant Gamma(1-1/p)/Gamma(3-1/p).
inline double hardy_constant(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("hardy_constant: requires p > 1");
  return gamma_fn(1.0 - 1.0 / p) / gamma_fn(3.0 - 1.0 / p);
}

/// Tail-minimum proxy for liminf_{t->inf} t^{gamma-2} I^2 w: the minimum of
/// that quantity over the last quarter of the grid.
inline double liminf_growth_estimate(const TimeSeries& w, double gamma_exp) {
  if (!(gamma_exp < 1.0))
    throw std::invalid_argument("liminf_growth_estimate: gamma must be < 1");
  const TimeSeries i2 = rl_left(w, FracOrder(2.0));
  const TimeGrid grid = w.grid;
  const int start = std::max(1, (3 * grid.n_steps) / 4);
  double m = std::numeric_limits<double>::infinity();
  for (int i = start; i <= grid.n_steps; ++i)
    m = std::min(m, std::pow(grid.node(i), gamma_exp - 2.0) * i2[i]);
  return m;
}

/// Fixed-point construction of an inequality-satisfying w:
///   w <- solve_linear_volterra(params, a * I^{3-gamma} |w|^p)
/// starting from w0 = A + B t. Divergence (sup-norm above 1e10) is reported
/// as a blow-up-like outcome, not an error.
struct FixedPointResult {
  TimeSeries w;
  bool converged = false;
  bool diverged = false;
  int iterations = 0;
  double last_change = 0.0;
};

inline FixedPointResult fixed_point_solution(const InequalityParams& params,
                                             const TimeGrid& grid,
                                             double tol = 1e-8, int max_iter = 100) {
  TimeSeries w = TimeSeries::sample(
      grid, [&](double t) { return params.A + params.B * t; });
  FixedPointResult res{w};
  const FracOrder mem_order(3.0 - params.gamma);
  for (int it = 1; it <= max_iter; ++it) {
    std::vector<double> gp(static_cast<std::size_t>(grid.size()));
    for (int i = 0; i < grid.size(); ++i)
      gp[static_cast<std::size_t>(i)] = std::pow(std::abs(w[i]), params.p);
    TimeSeries forcing = rl_left(TimeSeries(grid, std::move(gp)), mem_order);
    for (double& v : forcing.values) v *= params.a;
    TimeSeries next = solve_linear_volterra(params, forcing);
    res.iterations = it;
    res.last_change = max_abs_diff(next, w);
    w = std::move(next);
    if (w.max_abs() > 1e10) {
      res.diverged = true;
      break;
    }
    if (res.last_change < tol) {
      res.converged = true;
      break;
    }
  }
  res.w = std::move(w);
  return res;
}

}  // namespace fracwave
