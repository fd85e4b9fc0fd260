#include "fracdoe/hurst.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracdoe {

namespace {

// Adaptive Simpson on [a, b].
template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(const F& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace

HurstConstants compute_constants(double hurst) {
  if (!(hurst >= 0.5 && hurst < 1.0))
    throw std::domain_error("hurst index must lie in [0.5, 1), got " +
                            std::to_string(hurst));
  const double kappa =
      2.0 * hurst * std::tgamma(1.5 - hurst) * std::tgamma(0.5 + hurst);
  const double lambda = hurst * std::tgamma(3.0 - 2.0 * hurst) *
                        std::tgamma(hurst + 0.5) /
                        (2.0 * (1.0 - hurst) * std::tgamma(1.5 - hurst));
  return {hurst, kappa, lambda};
}

double eval_kH(double t, double s, const HurstConstants& c) {
  if (!(s > 0.0 && s < t))
    throw std::domain_error("eval_kH requires 0 < s < t");
  const double e = 0.5 - c.hurst;
  return std::pow(s, e) * std::pow(t - s, e) / c.kappa;
}

double eval_KH(double t, double s, double hurst) {
  if (!(s > 0.0 && s < t))
    throw std::domain_error("eval_KH requires 0 < s < t");
  if (hurst == 0.5) return 1.0;
  if (!(hurst > 0.5 && hurst < 1.0))
    throw std::domain_error("eval_KH requires hurst in [0.5, 1)");
  // Substitute xi = (r-s)^{H-1/2}: the integrable endpoint singularity at
  // r = s flattens and K_H = 2H \int_0^{(t-s)^{H-1/2}} (s + xi^q)^{H-1/2} dxi
  // with q = 1/(H-1/2).
  const double q = 1.0 / (hurst - 0.5);
  const double upper = std::pow(t - s, hurst - 0.5);
  const auto f = [&](double xi) {
    return std::pow(s + std::pow(xi, q), hurst - 0.5);
  };
  return 2.0 * hurst * integrate(f, 0.0, upper, 1e-12 * upper * f(upper) + 1e-300);
}

double eval_wH(double t, const HurstConstants& c) {
  if (t < 0.0) throw std::domain_error("eval_wH requires t >= 0");
  if (t == 0.0) return 0.0;
  const double e = 2.0 - 2.0 * c.hurst;
  return std::pow(t, e) / (2.0 * c.lambda * e);
}

double weight_density(double t, const HurstConstants& c) {
  if (t < 0.0) throw std::domain_error("weight_density requires t >= 0");
  return std::pow(t, 1.0 - 2.0 * c.hurst) / (2.0 * c.lambda);
}

double inverse_wH(double theta, const HurstConstants& c) {
  if (theta < 0.0) throw std::domain_error("inverse_wH requires theta >= 0");
  if (theta == 0.0) return 0.0;
  const double e = 2.0 - 2.0 * c.hurst;
  return std::pow(2.0 * c.lambda * e * theta, 1.0 / e);
}

} // namespace fracdoe
