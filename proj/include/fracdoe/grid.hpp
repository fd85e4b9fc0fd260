#ifndef FRACDOE_GRID_HPP
#define FRACDOE_GRID_HPP

#include <vector>

#include "fracdoe/hurst.hpp"

namespace fracdoe {

enum class ClockUniform { physical_clock, weight_clock };

// Strictly increasing time points, tagged with the clock in which the
// spacing is uniform. Grids used by the transformed (w_H-clock) pipelines
// may start at t = 0; quadratures that touch t^{1-2H} require t0 > 0 and
// guard for it at the call site.
struct TimeGrid {
  std::vector<double> points;
  ClockUniform uniform_in = ClockUniform::physical_clock;

  std::size_t size() const { return points.size(); }
  double front() const { return points.front(); }
  double back() const { return points.back(); }
};

void validate_grid(const TimeGrid& grid);

// n+1 points, t0 ... T, equally spaced in physical time.
TimeGrid uniform_physical_grid(double t0, double T, std::size_t n);

// n+1 points 0 = t(0) < ... < t(theta_max), equally spaced in theta = w_H(t).
TimeGrid uniform_weight_grid(const HurstConstants& c, double T, std::size_t n);

// Geometric refinement toward the origin (ratio r) followed by a uniform
// tail; first point t0 > 0. Used by the singular-kernel quadratures.
TimeGrid graded_origin_grid(double T, std::size_t n, double ratio = 1.05,
                            double t0_fraction = 1e-6);

// Index of the grid point closest to t.
std::size_t nearest_index(const TimeGrid& grid, double t);

} // namespace fracdoe

#endif
