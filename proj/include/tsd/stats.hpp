#pragma once

#include <map>
#include <span>
#include <vector>

namespace tsd {

struct ErrorStats {
    std::size_t trials = 0;
    double mean = 0.0;
    double std = 0.0;
    double mean_stderr = 0.0;
    double std_stderr = 0.0;
    std::map<double, double> quantiles;  // probability -> value
};

// Mean, sample standard deviation, their standard errors, and the
// {0.5, 0.9, 0.99} quantiles by sorted-sample linear interpolation.
ErrorStats summarize(std::span<const double> samples);

double quantile(std::vector<double> samples, double probability);

// sqrt of the mean square; the per-factor error corridor is stated for this
// second-moment statistic rather than the central standard deviation.
double root_mean_square(std::span<const double> samples);

}  // namespace tsd
