#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fracwave {

/// Uniform temporal grid with nodes t_i = i*h, i = 0..n_steps.
struct TimeGrid {
  int n_steps = 0;
  double h = 0.0;

  TimeGrid(int n_steps_, double h_) : n_steps(n_steps_), h(h_) {
    if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
    if (!(h > 0.0) || !std::isfinite(h))
      throw std::invalid_argument("TimeGrid: step size must be positive and finite");
  }

  double horizon() const { return n_steps * h; }
  double node(int i) const { return i * h; }
  int size() const { return n_steps + 1; }

  bool operator==(const TimeGrid& o) const {
    return n_steps == o.n_steps && h == o.h;
  }
};

/// Scalar function sampled on a TimeGrid. Construction rejects NaN/Inf so a
/// non-finite state is always an explicit error, never a silent value.
struct TimeSeries {
  TimeGrid grid;
  std::vector<double> values;

  TimeSeries(TimeGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(grid.size()))
      throw std::invalid_argument("TimeSeries: value count does not match grid");
    for (double x : values)
      if (!std::isfinite(x))
        throw std::invalid_argument("TimeSeries: non-finite sample");
  }

  template <typename F>
  static TimeSeries sample(TimeGrid g, F&& f) {
    std::vector<double> v(g.size());
    for (int i = 0; i < g.size(); ++i) v[static_cast<std::size_t>(i)] = f(g.node(i));
    return TimeSeries(g, std::move(v));
  }

  static TimeSeries constant(TimeGrid g, double c) {
    return TimeSeries(g, std::vector<double>(static_cast<std::size_t>(g.size()), c));
  }

  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  int size() const { return grid.size(); }

  double max_abs() const {
    double m = 0.0;
    for (double x : values) m = std::max(m, std::abs(x));
    return m;
  }
};

inline double max_abs_diff(const TimeSeries& a, const TimeSeries& b) {
  if (!(a.grid == b.grid))
    throw std::invalid_argument("max_abs_diff: series live on different grids");
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Trapezoidal integral of a sampled series over its full grid.
inline double trapezoid(const TimeSeries& f) {
  double s = 0.5 * (f[0] + f[f.size() - 1]);
  for (int i = 1; i < f.size() - 1; ++i) s += f[i];
  return s * f.grid.h;
}

}  // namespace fracwave
