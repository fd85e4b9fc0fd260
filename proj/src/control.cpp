#include "fracdoe/control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracdoe/state_system.hpp"

namespace fracdoe {

namespace {

// 16-point Gauss-Legendre on [-1, 1].
constexpr int kGL = 16;
constexpr double kGLx[kGL] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
    -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
    -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
    0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
    0.9894009349916499};
constexpr double kGLw[kGL] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
    0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
    0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
    0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
    0.0271524594117541};

// Two-sided graded mesh on [0, t]: cells accumulate toward both endpoints
// with exponent gamma; midpoint product integration of f.
template <class F>
double graded_midpoint(const F& f, double t, int m_per_side, double gamma) {
  double acc = 0.0;
  const double half = 0.5 * t;
  double prev = 0.0;
  for (int j = 1; j <= m_per_side; ++j) {
    const double s = half * std::pow(static_cast<double>(j) / m_per_side, gamma);
    acc += f(prev + 0.5 * (s - prev)) * (s - prev);
    prev = s;
  }
  prev = 0.0;
  for (int j = 1; j <= m_per_side; ++j) {
    const double s = half * std::pow(static_cast<double>(j) / m_per_side, gamma);
    acc += f(t - prev - 0.5 * (s - prev)) * (s - prev);
    prev = s;
  }
  return acc;
}

// K_H(t,s) by fixed Gauss-Legendre on the substituted integrand; the inner
// loop of u_from_v cannot afford the adaptive version.
double eval_KH_fast(double t, double s, double hurst) {
  if (hurst == 0.5) return 1.0;
  const double q = 1.0 / (hurst - 0.5);
  const double upper = std::pow(t - s, hurst - 0.5);
  // Boundary layer of width ~ upper/q at the right end when q is large.
  const double split = (q > 8.0) ? upper * (1.0 - 4.0 / q) : 0.0;
  double acc = 0.0;
  const auto seg = [&](double a, double b) {
    const double c0 = 0.5 * (a + b), c1 = 0.5 * (b - a);
    double v = 0.0;
    for (int i = 0; i < kGL; ++i) {
      const double xi = c0 + c1 * kGLx[i];
      v += kGLw[i] * std::pow(s + std::pow(xi, q), hurst - 0.5);
    }
    return v * c1;
  };
  if (split > 0.0) {
    acc = seg(0.0, split) + seg(split, upper);
  } else {
    acc = seg(0.0, upper);
  }
  return 2.0 * hurst * acc;
}

void require_positive_origin(const TimeGrid& grid, double hurst,
                             const char* who) {
  if (hurst > 0.5 && !(grid.front() > 0.0))
    throw std::invalid_argument(std::string(who) +
                                ": grid must start at t0 > 0 for H > 1/2 "
                                "(singular weight at the origin)");
}

} // namespace

double SampledControl::interp(double t) const {
  const auto& p = grid.points;
  if (t <= p.front()) return values.front();
  if (t >= p.back()) return values.back();
  const auto it = std::upper_bound(p.begin(), p.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - p.begin());
  const double w = (t - p[i - 1]) / (p[i] - p[i - 1]);
  return (1.0 - w) * values[i - 1] + w * values[i];
}

void validate_spec(const ControlSpec& spec) {
  if (!(spec.hurst >= 0.5 && spec.hurst < 1.0))
    throw std::domain_error("control spec: hurst must lie in [0.5, 1)");
  if (spec.family == ControlFamily::modulated_power_law && !spec.frequency)
    throw std::invalid_argument("modulated control requires a frequency");
  if (spec.family == ControlFamily::power_law && spec.frequency)
    throw std::invalid_argument("power-law control must not carry a frequency");
  if (spec.family != ControlFamily::custom_samples && !(spec.scale > 0.0))
    throw std::domain_error("designed controls require scale > 0");
}

double eval_control_v(const ControlSpec& spec, const HurstConstants& c,
                      double t) {
  const double profile =
      spec.scale * std::sqrt(2.0 * c.lambda) * std::pow(t, c.hurst - 0.5);
  switch (spec.family) {
    case ControlFamily::power_law:
      return profile;
    case ControlFamily::modulated_power_law:
      return profile * M_SQRT2 *
             std::cos(*spec.frequency * t + spec.phase.value_or(0.0));
    case ControlFamily::custom_samples:
      throw std::invalid_argument("custom_samples has no closed form");
  }
  return 0.0;
}

double eval_control_u(const ControlSpec& spec, const HurstConstants& c,
                      double t) {
  const double profile = spec.scale * c.kappa / std::sqrt(2.0 * c.lambda) *
                         std::pow(t, c.hurst - 0.5);
  switch (spec.family) {
    case ControlFamily::power_law:
      return profile;
    case ControlFamily::modulated_power_law:
      return profile * M_SQRT2 *
             std::cos(*spec.frequency * t + spec.phase.value_or(0.0));
    case ControlFamily::custom_samples:
      throw std::invalid_argument("custom_samples has no closed form");
  }
  return 0.0;
}

SampledControl realize_real_control(const ControlSpec& spec,
                                    const TimeGrid& grid) {
  validate_spec(spec);
  validate_grid(grid);
  const HurstConstants c = compute_constants(spec.hurst);
  SampledControl out;
  out.grid = grid;
  out.clock = ControlClock::v_domain;
  out.values.reserve(grid.size());
  for (double t : grid.points) out.values.push_back(eval_control_v(spec, c, t));
  return out;
}

SampledControl realize_u_control(const ControlSpec& spec, const TimeGrid& grid) {
  validate_spec(spec);
  validate_grid(grid);
  const HurstConstants c = compute_constants(spec.hurst);
  SampledControl out;
  out.grid = grid;
  out.clock = ControlClock::u_domain;
  out.values.reserve(grid.size());
  for (double t : grid.points) out.values.push_back(eval_control_u(spec, c, t));
  return out;
}

double control_energy(const SampledControl& v, const HurstConstants& c) {
  if (v.clock != ControlClock::v_domain)
    throw std::invalid_argument("control_energy expects a v-domain control");
  validate_grid(v.grid);
  const auto& ts = v.grid.points;
  const double T = ts.back();
  const auto f = [&](std::size_t i) {
    return v.values[i] * v.values[i] * weight_density(ts[i], c);
  };
  // First positive node covers the [0, t0] strip as a rectangle; the weight
  // density is infinite at t = 0 for H > 1/2 but the product stays bounded.
  std::size_t i0 = 0;
  while (i0 < ts.size() && ts[i0] == 0.0) ++i0;
  if (i0 >= ts.size() - 1)
    throw std::invalid_argument("control_energy: degenerate grid");
  double acc = f(i0) * ts[i0];
  for (std::size_t i = i0; i + 1 < ts.size(); ++i)
    acc += 0.5 * (f(i) + f(i + 1)) * (ts[i + 1] - ts[i]);
  return acc / T;
}

SampledControl v_from_u(const SampledControl& u, const HurstConstants& c) {
  if (u.clock != ControlClock::u_domain)
    throw std::invalid_argument("v_from_u expects a u-domain control");
  validate_grid(u.grid);
  if (u.grid.size() < 16)
    throw std::invalid_argument(
        "v_from_u: grid too coarse for a stable weight-clock derivative; "
        "refine to at least 16 points");
  require_positive_origin(u.grid, c.hurst, "v_from_u");

  SampledControl out;
  out.grid = u.grid;
  out.clock = ControlClock::v_domain;
  const std::size_t n = u.grid.size();

  if (c.hurst == 0.5) { // identity transform
    out.values = u.values;
    return out;
  }

  const double e = 0.5 - c.hurst;
  const auto& ts = u.grid.points;
  // I(t) = \int_0^t k_H(t,s) u(s) ds, graded midpoint at both endpoints.
  std::vector<double> I(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = ts[i];
    const auto f = [&](double s) {
      return std::pow(s, e) * std::pow(t - s, e) * u.interp(s);
    };
    I[i] = graded_midpoint(f, t, 192, 4.0) / c.kappa;
  }
  // Centered difference in the weight clock.
  std::vector<double> th(n);
  for (std::size_t i = 0; i < n; ++i) th[i] = eval_wH(ts[i], c);
  out.values.resize(n);
  out.values[0] = (I[1] - I[0]) / (th[1] - th[0]);
  out.values[n - 1] = (I[n - 1] - I[n - 2]) / (th[n - 1] - th[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i)
    out.values[i] = (I[i + 1] - I[i - 1]) / (th[i + 1] - th[i - 1]);
  return out;
}

SampledControl u_from_v(const SampledControl& v, const HurstConstants& c) {
  if (v.clock != ControlClock::v_domain)
    throw std::invalid_argument("u_from_v expects a v-domain control");
  validate_grid(v.grid);
  if (v.grid.size() < 16)
    throw std::invalid_argument(
        "u_from_v: grid too coarse for a stable derivative; refine to at "
        "least 16 points");
  require_positive_origin(v.grid, c.hurst, "u_from_v");

  SampledControl out;
  out.grid = v.grid;
  out.clock = ControlClock::u_domain;
  const std::size_t n = v.grid.size();

  if (c.hurst == 0.5) {
    out.values = v.values;
    return out;
  }

  const auto& ts = v.grid.points;
  // J(t) = \int_0^t K_H(t,s) v(s) w'(s) ds; weight s^{1-2H} is singular at 0
  // and K_H vanishes at s = t, so grade both ends.
  std::vector<double> J(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = ts[i];
    const auto f = [&](double s) {
      return eval_KH_fast(t, s, c.hurst) * v.interp(s) * weight_density(s, c);
    };
    J[i] = graded_midpoint(f, t, 128, 5.0);
  }
  out.values.resize(n);
  out.values[0] = (J[1] - J[0]) / (ts[1] - ts[0]);
  out.values[n - 1] = (J[n - 1] - J[n - 2]) / (ts[n - 1] - ts[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i)
    out.values[i] = (J[i + 1] - J[i - 1]) / (ts[i + 1] - ts[i - 1]);
  return out;
}

ControlSpec design_optimal_input(const SystemParams& p) {
  validate_params(p);
  ControlSpec spec;
  spec.hurst = p.hurst;
  spec.scale = 1.0;
  if (p.damping * p.damping >= 2.0 * p.theta) {
    spec.family = ControlFamily::power_law;
  } else {
    spec.family = ControlFamily::modulated_power_law;
    spec.frequency = std::sqrt(p.theta - 0.5 * p.damping * p.damping);
    spec.phase = 0.0;
  }
  return spec;
}

ControlFunction control_function(const ControlSpec& spec,
                                 const HurstConstants& c) {
  validate_spec(spec);
  return [spec, c](double t) { return eval_control_v(spec, c, t); };
}

ControlFunction control_function_u(const ControlSpec& spec,
                                   const HurstConstants& c) {
  validate_spec(spec);
  return [spec, c](double t) { return eval_control_u(spec, c, t); };
}

ControlFunction control_function(const SampledControl& sampled) {
  return [sampled](double t) { return sampled.interp(t); };
}

} // namespace fracdoe
