#ifndef FRACDOE_CONTROL_HPP
#define FRACDOE_CONTROL_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fracdoe/grid.hpp"
#include "fracdoe/hurst.hpp"

namespace fracdoe {

enum class ControlClock { u_domain, v_domain };

struct SampledControl {
  TimeGrid grid;
  std::vector<double> values;
  ControlClock clock = ControlClock::v_domain;

  // Piecewise-linear evaluation, clamped at the ends.
  double interp(double t) const;
};

enum class ControlFamily { power_law, modulated_power_law, custom_samples };

// Symbolic description of an input family. The v-domain profile is primary:
//   power_law:            v(t) = scale * sqrt(2 lambda) t^{H-1/2}
//   modulated_power_law:  v(t) = scale * sqrt(2 lambda) * sqrt(2) t^{H-1/2}
//                                 cos(frequency * t + phase)
// The sqrt(2) restores the unit mean square of the complex profile the
// modulated family realizes.
struct ControlSpec {
  ControlFamily family = ControlFamily::power_law;
  double scale = 1.0;
  std::optional<double> frequency;
  std::optional<double> phase;
  double hurst = 0.5;
};

void validate_spec(const ControlSpec& spec);

// Closed-form evaluation of the v-domain profile at time t.
double eval_control_v(const ControlSpec& spec, const HurstConstants& c, double t);

// Closed-form u-domain counterpart:
//   power_law:            u(t) = scale * kappa/sqrt(2 lambda) t^{H-1/2}
//   modulated_power_law:  u(t) = scale * kappa/sqrt(2 lambda) * sqrt(2)
//                                 t^{H-1/2} cos(frequency * t + phase)
double eval_control_u(const ControlSpec& spec, const HurstConstants& c, double t);

SampledControl realize_real_control(const ControlSpec& spec, const TimeGrid& grid);
SampledControl realize_u_control(const ControlSpec& spec, const TimeGrid& grid);

// (1/T) \int_0^T |v(t)|^2 dw_H(t); admissible when <= 1.
double control_energy(const SampledControl& v, const HurstConstants& c);

// Fractional transforms between the physical control u and its w_H-clock
// counterpart v:
//   v(t) = d/dw_H(t) \int_0^t k_H(t,s) u(s) ds
//   u(t) = d/dt      \int_0^t K_H(t,s) v(s) dw_H(s)
// Product integration on graded meshes plus a centered difference in the
// appropriate clock; the two maps invert each other on interior points.
SampledControl v_from_u(const SampledControl& u, const HurstConstants& c);
SampledControl u_from_v(const SampledControl& v, const HurstConstants& c);

struct SystemParams; // state_system.hpp

// Case split on k^2 >= 2 theta (boundary included): power-law profile in the
// overdamped regime, resonance-modulated at omega = sqrt(theta - k^2/2)
// otherwise.
ControlSpec design_optimal_input(const SystemParams& p);

using ControlFunction = std::function<double(double)>;

ControlFunction control_function(const ControlSpec& spec, const HurstConstants& c);
ControlFunction control_function_u(const ControlSpec& spec, const HurstConstants& c);
ControlFunction control_function(const SampledControl& sampled);

} // namespace fracdoe

#endif
