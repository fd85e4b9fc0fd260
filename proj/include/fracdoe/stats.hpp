#ifndef FRACDOE_STATS_HPP
#define FRACDOE_STATS_HPP

#include <span>
#include <utility>

namespace fracdoe {

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs); // unbiased
double median(std::span<const double> xs);

double normal_cdf(double x);

// Anderson-Darling normality test with estimated mean and variance
// (case 3), p-value from the Stephens small-sample adjustment.
double anderson_darling_pvalue(std::span<const double> xs);

// Least-squares slope and intercept of y against x.
std::pair<double, double> fit_line(std::span<const double> x,
                                   std::span<const double> y);

} // namespace fracdoe

#endif
