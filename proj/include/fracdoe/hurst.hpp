#ifndef FRACDOE_HURST_HPP
#define FRACDOE_HURST_HPP

namespace fracdoe {

// Constants attached to a Hurst index H in [1/2, 1):
//   kappa  = 2 H Gamma(3/2 - H) Gamma(1/2 + H)
//   lambda = H Gamma(3 - 2H) Gamma(H + 1/2) / (2 (1 - H) Gamma(3/2 - H))
// At H = 1/2 both Gamma products collapse and (kappa, lambda) = (1, 1/2).
struct HurstConstants {
  double hurst;
  double kappa;
  double lambda;
};

HurstConstants compute_constants(double hurst);

// Weakly singular Volterra kernel k_H(t,s) = kappa^{-1} s^{1/2-H} (t-s)^{1/2-H},
// defined for 0 < s < t. Identically 1 at H = 1/2.
double eval_kH(double t, double s, const HurstConstants& c);

// Inverse kernel K_H(t,s) = H (2H-1) \int_s^t r^{H-1/2} (r-s)^{H-3/2} dr for
// H > 1/2; the degenerate H = 1/2 case is taken to be the constant 1 so that
// the Y <-> Z transforms reduce to the identity there.
double eval_KH(double t, double s, double hurst);

// Variance function of the fundamental martingale:
//   w_H(t) = t^{2-2H} / (2 lambda (2-2H)),   w_H(t) = t at H = 1/2.
double eval_wH(double t, const HurstConstants& c);

// d w_H / dt = t^{1-2H} / (2 lambda). Diverges at t = 0 for H > 1/2.
double weight_density(double t, const HurstConstants& c);

// Inverse clock map: t such that w_H(t) = theta.
double inverse_wH(double theta, const HurstConstants& c);

} // namespace fracdoe

#endif
