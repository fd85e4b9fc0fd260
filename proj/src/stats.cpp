#include "fracdoe/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fracdoe {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance needs >= 2 values");
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

double median(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("median of empty sample");
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double anderson_darling_pvalue(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 8) throw std::invalid_argument("anderson_darling needs >= 8 values");
  const double m = mean(xs);
  const double sd = std::sqrt(sample_variance(xs));
  if (!(sd > 0.0)) return 0.0;
  std::vector<double> z(xs.begin(), xs.end());
  for (double& v : z) v = (v - m) / sd;
  std::sort(z.begin(), z.end());
  double a2 = 0.0;
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double lo = normal_cdf(z[i]);
    double hi = normal_cdf(z[n - 1 - i]);
    lo = std::clamp(lo, 1e-300, 1.0 - 1e-16);
    hi = std::clamp(hi, 1e-300, 1.0 - 1e-16);
    a2 += (2.0 * static_cast<double>(i) + 1.0) *
          (std::log(lo) + std::log1p(-hi));
  }
  a2 = -dn - a2 / dn;
  // Stephens' adjustment for estimated mean and variance.
  const double as = a2 * (1.0 + 0.75 / dn + 2.25 / (dn * dn));
  if (as >= 0.6) return std::exp(1.2937 - 5.709 * as + 0.0186 * as * as);
  if (as > 0.34) return std::exp(0.9177 - 4.279 * as - 1.38 * as * as);
  if (as > 0.2) return 1.0 - std::exp(-8.318 + 42.796 * as - 59.938 * as * as);
  return 1.0 - std::exp(-13.436 + 101.14 * as - 223.73 * as * as);
}

std::pair<double, double> fit_line(std::span<const double> x,
                                   std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line needs matching samples, n >= 2");
  const double mx = mean(x), my = mean(y);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_line: degenerate x");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

} // namespace fracdoe
