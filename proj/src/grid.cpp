#include "fracdoe/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracdoe {

void validate_grid(const TimeGrid& grid) {
  if (grid.points.size() < 2)
    throw std::invalid_argument("grid needs at least 2 points");
  if (grid.points.front() < 0.0)
    throw std::invalid_argument("grid must start at t >= 0");
  for (std::size_t i = 1; i < grid.points.size(); ++i)
    if (!(grid.points[i] > grid.points[i - 1]))
      throw std::invalid_argument("grid points must be strictly increasing");
}

TimeGrid uniform_physical_grid(double t0, double T, std::size_t n) {
  if (!(T > t0) || n < 1)
    throw std::invalid_argument("uniform_physical_grid: need T > t0, n >= 1");
  TimeGrid g;
  g.uniform_in = ClockUniform::physical_clock;
  g.points.resize(n + 1);
  const double h = (T - t0) / static_cast<double>(n);
  for (std::size_t i = 0; i <= n; ++i)
    g.points[i] = t0 + h * static_cast<double>(i);
  g.points.back() = T;
  return g;
}

TimeGrid uniform_weight_grid(const HurstConstants& c, double T, std::size_t n) {
  if (!(T > 0.0) || n < 1)
    throw std::invalid_argument("uniform_weight_grid: need T > 0, n >= 1");
  TimeGrid g;
  g.uniform_in = ClockUniform::weight_clock;
  g.points.resize(n + 1);
  const double theta_max = eval_wH(T, c);
  for (std::size_t i = 0; i <= n; ++i)
    g.points[i] =
        inverse_wH(theta_max * static_cast<double>(i) / static_cast<double>(n), c);
  g.points.front() = 0.0;
  g.points.back() = T;
  return g;
}

TimeGrid graded_origin_grid(double T, std::size_t n, double ratio,
                            double t0_fraction) {
  if (!(T > 0.0) || n < 8 || !(ratio > 1.0))
    throw std::invalid_argument("graded_origin_grid: need T > 0, n >= 8, ratio > 1");
  const double t0 = t0_fraction * T;
  // Geometric section t0 * ratio^j until the local step would exceed the
  // uniform step of the remaining budget, then uniform to T.
  std::vector<double> pts{t0};
  double t = t0;
  while (pts.size() < n) {
    const double remaining = static_cast<double>(n + 1 - pts.size());
    const double uniform_h = (T - t) / remaining;
    const double geom_h = t * (ratio - 1.0);
    if (geom_h >= uniform_h) break;
    t += geom_h;
    pts.push_back(t);
  }
  const std::size_t left = n + 1 - pts.size();
  const double h = (T - t) / static_cast<double>(left);
  for (std::size_t i = 1; i <= left; ++i)
    pts.push_back(t + h * static_cast<double>(i));
  pts.back() = T;
  TimeGrid g;
  g.uniform_in = ClockUniform::physical_clock;
  g.points = std::move(pts);
  return g;
}

std::size_t nearest_index(const TimeGrid& grid, double t) {
  const auto& p = grid.points;
  auto it = std::lower_bound(p.begin(), p.end(), t);
  if (it == p.end()) return p.size() - 1;
  if (it == p.begin()) return 0;
  const std::size_t i = static_cast<std::size_t>(it - p.begin());
  return (t - p[i - 1] <= p[i] - t) ? i - 1 : i;
}

} // namespace fracdoe
