#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "fracwave/frac_integral.hpp"
#include "fracwave/rng.hpp"

using namespace fracwave;

namespace {
const double kSqrtPi = std::sqrt(M_PI);
}

TEST_CASE("rl_left: integral of a constant is t") {
  const TimeGrid grid(500, 1.0 / 500.0);
  const TimeSeries one = TimeSeries::constant(grid, 1.0);
  const TimeSeries out = rl_left(one, FracOrder(1.0));
  for (int i = 0; i <= grid.n_steps; ++i)
    CHECK(out[i] == Catch::Approx(grid.node(i)).margin(1e-14));
  CHECK(out[0] == 0.0);
}

TEST_CASE("rl_left: half-order integral of t follows the power rule") {
  const TimeGrid grid(2000, 1.0 / 2000.0);
  const TimeSeries f = TimeSeries::sample(grid, [](double t) { return t; });
  const TimeSeries out = rl_left(f, FracOrder(0.5));
  // I^{1/2} t = Gamma(2)/Gamma(5/2) t^{3/2} = (4/(3 sqrt(pi))) t^{3/2},
  // and the rule reproduces linear data exactly up to roundoff.
  for (int i : {1, 500, 1000, 2000}) {
    const double exact = 4.0 / (3.0 * kSqrtPi) * std::pow(grid.node(i), 1.5);
    CHECK(out[i] == Catch::Approx(exact).margin(1e-12));
  }
}

TEST_CASE("rl_left: exponential forcing saturates at -1/lambda") {
  const TimeGrid grid(4000, 40.0 / 4000.0);
  const TimeSeries f = TimeSeries::sample(grid, [](double t) { return std::exp(-t); });
  const TimeSeries out = rl_left(f, FracOrder(1.0));
  const double exact = -std::expm1(-40.0);
  CHECK(out[grid.n_steps] == Catch::Approx(exact).epsilon(1e-6));
  CHECK(rl_left_at_end(f, FracOrder(1.0)) == Catch::Approx(out[grid.n_steps]).margin(1e-13));
}

TEST_CASE("rl_right: constant, power profile, zero") {
  const TimeGrid grid(2000, 1.0 / 2000.0);
  const double T = grid.horizon();

  const TimeSeries one = TimeSeries::constant(grid, 1.0);
  const TimeSeries r1 = rl_right(one, FracOrder(1.0));
  for (int i : {0, 777, 2000})
    CHECK(r1[i] == Catch::Approx(T - grid.node(i)).margin(1e-13));
  CHECK(r1[grid.n_steps] == 0.0);

  // l = 8, gamma = 1/2, beta = 5/2: right integral of (1-t)^{5.5} equals
  // (Gamma(6.5)/Gamma(9)) (1-t)^8.
  const double l = 8.0, g = 0.5, beta = 2.5;
  const TimeSeries prof =
      TimeSeries::sample(grid, [&](double t) { return std::pow(1.0 - t / T, l - (3.0 - g)); });
  const TimeSeries num = rl_right(prof, FracOrder(beta));
  const TimeSeries exact = rl_power_closed_form(l, g, FracOrder(beta), grid);
  CHECK(gamma_fn(6.5) / gamma_fn(9.0) == Catch::Approx(0.0071400118505715367).epsilon(1e-12));
  for (int i : {0, 400, 1000, 1600}) {
    CHECK(num[i] == Catch::Approx(exact[i]).epsilon(2e-4));
  }

  const TimeSeries zero = TimeSeries::constant(grid, 0.0);
  CHECK(rl_right(zero, FracOrder(0.7)).max_abs() == 0.0);
}

TEST_CASE("rl_power_closed_form: elementary case and endpoint") {
  const TimeGrid grid(100, 2.0 / 100.0);
  const double T = grid.horizon();
  // beta = 1, l = 3, gamma = 1: tI_T^1 (1-t/T) = (T/2)(1-t/T)^2
  const TimeSeries cf = rl_power_closed_form(3.0, 1.0, FracOrder(1.0), grid);
  for (int i : {0, 25, 50, 99}) {
    const double rem = 1.0 - grid.node(i) / T;
    CHECK(cf[i] == Catch::Approx(0.5 * T * rem * rem).epsilon(1e-13));
  }
  CHECK(cf[grid.n_steps] == 0.0);

  // Gamma poles rejected: nu + 1 = l + gamma - 2 = 0 at l = 3, gamma = -1.
  CHECK_THROWS_AS(rl_power_closed_form(3.0, -1.0, FracOrder(1.0), grid), std::domain_error);
  // non-integrable profile
  CHECK_THROWS_AS(rl_power_closed_form(0.5, 0.0, FracOrder(0.5), grid),
                  std::invalid_argument);
}

TEST_CASE("check_semigroup: residuals at the documented tolerances") {
  const TimeGrid grid(2000, 1.0 / 2000.0);
  const TimeSeries one = TimeSeries::constant(grid, 1.0);
  CHECK(check_semigroup(one, FracOrder(0.5), FracOrder(0.5)) <= 5e-4);

  const TimeSeries t2 = TimeSeries::sample(grid, [](double t) { return t * t; });
  // I^1 I^1 t^2 = t^4/12
  const TimeSeries lhs = rl_left(rl_left(t2, FracOrder(1.0)), FracOrder(1.0));
  const TimeSeries oracle =
      TimeSeries::sample(grid, [](double t) { return std::pow(t, 4) / 12.0; });
  CHECK(max_abs_diff(lhs, oracle) <= 5e-4);
  CHECK(check_semigroup(t2, FracOrder(1.0), FracOrder(1.0)) <= 5e-4);

  CHECK_THROWS_AS(TimeGrid(0, 0.1), std::invalid_argument);
}

TEST_CASE("check_adjoint: trivial, Beta-moment and zero cases") {
  const TimeGrid grid(2000, 1.0 / 2000.0);
  const TimeSeries one = TimeSeries::constant(grid, 1.0);
  CHECK(check_adjoint(one, one, FracOrder(1.0)) <= 1e-10);

  // f = t, g = 1 - t, alpha = 1/2 on T = 1: both sides equal
  // 16/(105 sqrt(pi)) by Beta-function moments.
  const TimeSeries f = TimeSeries::sample(grid, [](double t) { return t; });
  const TimeSeries g = TimeSeries::sample(grid, [](double t) { return 1.0 - t; });
  CHECK(check_adjoint(f, g, FracOrder(0.5)) <= 1e-4);
  const TimeSeries lf = rl_left(f, FracOrder(0.5));
  std::vector<double> prod(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i) prod[i] = lf[i] * g[i];
  const double side = trapezoid(TimeSeries(grid, std::move(prod)));
  CHECK(side == Catch::Approx(0.085971746064420006).margin(1e-5));

  const TimeSeries zero = TimeSeries::constant(grid, 0.0);
  CHECK(check_adjoint(zero, g, FracOrder(0.5)) == 0.0);

  const TimeGrid other(100, 0.01);
  CHECK_THROWS_AS(check_adjoint(f, TimeSeries::constant(other, 1.0), FracOrder(0.5)),
                  std::invalid_argument);
}

TEST_CASE("laplace_check_exp: transform identity") {
  {
    auto [num, exact] = laplace_check_exp(FracOrder(1.0), -1.0, 1.0);
    CHECK(exact == Catch::Approx(0.5).epsilon(1e-15));
    CHECK(num == Catch::Approx(exact).margin(1e-4));
  }
  {
    auto [num, exact] = laplace_check_exp(FracOrder(0.5), -1.0, 2.0);
    CHECK(exact == Catch::Approx(std::pow(2.0, -0.5) / 3.0).epsilon(1e-15));
    CHECK(num == Catch::Approx(exact).margin(1e-4));
  }
  {
    auto [num, exact] = laplace_check_exp(FracOrder(2.0), -2.0, 1.0);
    CHECK(exact == Catch::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(num == Catch::Approx(exact).margin(1e-4));
  }
  CHECK_THROWS_AS(laplace_check_exp(FracOrder(1.0), -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(laplace_check_exp(FracOrder(1.0), 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(FracOrder(0.0), std::invalid_argument);
  CHECK_THROWS_AS(FracOrder(-1.0), std::invalid_argument);
}

TEST_CASE("property: linearity to roundoff") {
  Rng rng(20250810);
  const TimeGrid grid(300, 1.0 / 300.0);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<double> fv(grid.size()), gv(grid.size());
    for (auto& x : fv) x = rng.uniform(-1.0, 1.0);
    for (auto& x : gv) x = rng.uniform(-1.0, 1.0);
    const TimeSeries f(grid, fv), g(grid, gv);
    const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
    const double alpha = rng.uniform(0.2, 3.0);

    std::vector<double> comb(grid.size());
    for (int i = 0; i < grid.size(); ++i) comb[i] = a * f[i] + b * g[i];
    const TimeSeries lhs = rl_left(TimeSeries(grid, std::move(comb)), FracOrder(alpha));
    const TimeSeries lf = rl_left(f, FracOrder(alpha));
    const TimeSeries lg = rl_left(g, FracOrder(alpha));
    double worst = 0.0;
    for (int i = 0; i < grid.size(); ++i)
      worst = std::max(worst, std::abs(lhs[i] - (a * lf[i] + b * lg[i])));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("property: nonnegative weights preserve positivity") {
  for (double alpha : {0.25, 0.5, 1.0, 1.7, 2.5, 3.9}) {
    const ProductTrapWeights w(alpha, 5000);
    double min_w = 0.0;
    for (int c = 1; c <= w.panels(); ++c)
      min_w = std::min(min_w, std::min(w.a(c), w.b(c)));
    CAPTURE(alpha);
    CHECK(min_w >= 0.0);
  }

  Rng rng(7);
  const TimeGrid grid(400, 0.01);
  std::vector<double> fv(grid.size());
  for (auto& x : fv) x = rng.uniform(0.0, 1.0);
  const TimeSeries out = rl_left(TimeSeries(grid, fv), FracOrder(0.5));
  for (int i = 0; i < out.size(); ++i) CHECK(out[i] >= 0.0);
}

TEST_CASE("property: monotone in horizon for alpha >= 1 and f >= 0") {
  const TimeGrid grid(400, 0.02);
  const TimeSeries f =
      TimeSeries::sample(grid, [](double t) { return 1.0 + std::sin(3.0 * t); });
  for (double alpha : {1.0, 1.5, 2.5}) {
    const TimeSeries out = rl_left(f, FracOrder(alpha));
    for (int i = 1; i < out.size(); ++i) {
      CAPTURE(alpha, i);
      REQUIRE(out[i] >= out[i - 1] - 1e-14);
    }
  }
}

namespace {

double refinement_order(double alpha) {
  // max-norm error against the power rule I^alpha t^2 =
  // (2/Gamma(3+alpha)) t^{2+alpha}, halving h between n = 500..2000.
  double prev_err = 0.0, worst_order = 10.0;
  for (int n : {500, 1000, 2000}) {
    const TimeGrid grid(n, 1.0 / n);
    const TimeSeries f = TimeSeries::sample(grid, [](double t) { return t * t; });
    const TimeSeries out = rl_left(f, FracOrder(alpha));
    const double coef = 2.0 / gamma_fn(3.0 + alpha);
    double err = 0.0;
    for (int i = 0; i <= n; ++i)
      err = std::max(err, std::abs(out[i] - coef * std::pow(grid.node(i), 2.0 + alpha)));
    if (prev_err > 0.0) worst_order = std::min(worst_order, std::log2(prev_err / err));
    prev_err = err;
  }
  return worst_order;
}

}  // namespace

TEST_CASE("property: convergence order at least min(2, 1+alpha)") {
  for (double alpha : {0.3, 0.5, 1.0, 1.8}) {
    const double order = refinement_order(alpha);
    CAPTURE(alpha, order);
    CHECK(order >= std::min(2.0, 1.0 + alpha) - 0.15);
  }
}

TEST_CASE("property: identity residuals shrink under refinement") {
  double prev_sg = 0.0, prev_ad = 0.0;
  for (int n : {1000, 2000, 4000}) {
    const TimeGrid grid(n, 1.0 / n);
    const TimeSeries one = TimeSeries::constant(grid, 1.0);
    const TimeSeries f = TimeSeries::sample(grid, [](double t) { return t; });
    const TimeSeries g = TimeSeries::sample(grid, [](double t) { return 1.0 - t; });
    const double sg = check_semigroup(one, FracOrder(0.5), FracOrder(0.5));
    const double ad = check_adjoint(f, g, FracOrder(0.5));
    if (prev_sg > 0.0) {
      CHECK(prev_sg / sg >= 1.7);
      CHECK(prev_ad / ad >= 1.7);
    }
    prev_sg = sg;
    prev_ad = ad;
  }
}
