#pragma once

#include <utility>

namespace tsd {

// Density of the product X of N independent factors whose logs are centered
// Gaussians with standard deviation epsilon_m. Throws for x <= 0.
double lognormal_pdf(double x, int n_factors, double epsilon_m);

// Density of |1 - X|: zero below the support, two log branches on [0, 1],
// a single branch beyond 1.
double folded_lognormal_pdf(double eps, int n_factors, double epsilon_m);
double folded_lognormal_cdf(double eps, int n_factors, double epsilon_m);

// Closed-form lower bounds on the mean and standard deviation of |1 - X|.
// The std radical can go negative for small N*epsilon_m^2; it is clamped to 0.
std::pair<double, double> scalar_bounds(int n_factors, double epsilon_m);

// Limiting density of one factor's relative norm error under entrywise noise
// of relative size epsilon_m in dimension dim; support [0, 2*epsilon_m*sqrt(dim)].
double single_factor_norm_pdf(double x, double epsilon_m, int dim);
double single_factor_norm_cdf(double x, double epsilon_m, int dim);

double normal_cdf(double z);

}  // namespace tsd
