#ifndef FRACDOE_SPECTRAL_HPP
#define FRACDOE_SPECTRAL_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "fracdoe/state_system.hpp"

namespace fracdoe {

struct OperatorDiscretization {
  double horizon = 0.0;
  int n = 0;
  std::vector<double> nodes;   // midpoint nodes in (0, T)
  std::vector<double> weights; // sum to T
  Eigen::MatrixXd kernel_matrix; // W^{1/2} K W^{1/2}, symmetric
};

struct UpsilonSpectrum {
  double a = 0.0;
  std::array<std::complex<double>, 8> roots;
  std::array<double, 8> residuals; // |p(root)|
};

// G(t,sigma) = d/dtheta [ (1/2) t^{1/2-H} ell(t)^* phi(t) phi^{-1}(sigma)
//                          b(sigma) sigma^{1/2-H} ],  0 < sigma <= t.
// Point evaluation through the fundamental-matrix path and its co-integrated
// theta sensitivity; intended for moderate horizons (the path solver guards
// conditioning).
double eval_G(double t, double sigma, const SystemParams& p,
              const SolverOptions& opts = {});

// Nystrom discretization of K_T(s,sigma) = \int_{max(s,sigma)}^T G(t,s) G(t,sigma) dt
// on midpoint nodes. G columns are tabulated by propagating (Phi, dPhi) forward
// from each node, which stays well-conditioned at any horizon.
OperatorDiscretization build_KT(const SystemParams& p, double T, int n,
                                int substeps_per_cell = 4);

// Largest eigenvalue by deflation-free power iteration (tol 1e-10).
double top_eigenvalue(const OperatorDiscretization& K);

// All Nystrom eigenvalues, ascending.
std::vector<double> nystrom_spectrum(const OperatorDiscretization& K);

// Roots of ((y^2+theta)^2 - k^2 y^2)^2 + 2a via a companion-matrix solve.
UpsilonSpectrum upsilon_roots(const SystemParams& p, double a);

// The 8x8 Upsilon matrix as displayed; its characteristic polynomial equals
// the expanded degree-8 polynomial above.
Eigen::Matrix<double, 8, 8> upsilon_matrix(const SystemParams& p, double a);

// Coefficients of the monic degree-8 polynomial, constant term first.
std::array<double, 9> upsilon_polynomial(const SystemParams& p, double a);

struct DetPsiResult {
  double log_abs_det = 0.0;
  int sign = 1;
  double value() const; // sign * exp(log_abs_det), +-inf on overflow
};

// Integrates the coupled 8x8 pair
//   dPsi1/d<N> = -Psi1 Acal(t) - Psi2 Lcal^* Lcal,  Psi1(0) = Id
//   dPsi2/d<N> = -a lambda Psi1 Mcal(t) + Psi2 Acal(t)^*, Psi2(0) = 0
// in the weight clock with periodic rescaling; returns det Psi1(T) in log form.
DetPsiResult det_psi1_log(const SystemParams& p, double a, double T,
                          const SolverOptions& opts = {});
double det_psi1(const SystemParams& p, double a, double T,
                const SolverOptions& opts = {});

struct LaplaceIdentityReport {
  double a = 0.0;
  double lhs = 0.0; // prod_i (1 + 2 a nu_i(T)) over the Nystrom spectrum
  double rhs = 0.0; // exp(-2kT) det Psi1(T)
  double residual = 0.0; // |lhs - rhs| / |rhs|
  double nu1 = 0.0;
};

// Cross-checks prod(1 + 2a nu_i(T)) = exp(-2kT) det Psi1(T). Requires
// a > -1/(2 nu1) so the left side stays positive.
LaplaceIdentityReport laplace_identity_check(const SystemParams& p, double a,
                                             double T, int n,
                                             const SolverOptions& opts = {});

} // namespace fracdoe

#endif
