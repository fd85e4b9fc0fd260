#ifndef FRACDOE_DETAIL_RK4_HPP
#define FRACDOE_DETAIL_RK4_HPP

#include <algorithm>
#include <cmath>

namespace fracdoe::detail {

template <class State, class Rhs>
State rk4_step(const Rhs& f, double x, const State& y, double h) {
  const State k1 = f(x, y);
  const State k2 = f(x + 0.5 * h, State(y + (0.5 * h) * k1));
  const State k3 = f(x + 0.5 * h, State(y + (0.5 * h) * k2));
  const State k4 = f(x + h, State(y + h * k3));
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Advance over [x0, x1] with m equal RK4 steps.
template <class State, class Rhs>
State rk4_advance(const Rhs& f, double x0, double x1, const State& y0, int m) {
  State y = y0;
  const double h = (x1 - x0) / m;
  for (int j = 0; j < m; ++j) y = rk4_step(f, x0 + j * h, y, h);
  return y;
}

inline int substeps_for(double dx, double steps_per_unit, int min_substeps,
                        int max_substeps) {
  const double want = std::ceil(dx * steps_per_unit);
  const double m = std::clamp(want, static_cast<double>(min_substeps),
                              static_cast<double>(max_substeps));
  return static_cast<int>(m);
}

} // namespace fracdoe::detail

#endif
