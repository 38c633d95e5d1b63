#include "tsd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsd {

double quantile(std::vector<double> samples, double probability) {
    if (samples.empty()) throw std::invalid_argument("quantile of empty sample");
    if (probability < 0.0 || probability > 1.0)
        throw std::invalid_argument("probability must lie in [0, 1]");
    std::sort(samples.begin(), samples.end());
    const double h = probability * double(samples.size() - 1);
    const std::size_t lo = std::size_t(std::floor(h));
    const std::size_t hi = std::min(lo + 1, samples.size() - 1);
    const double frac = h - double(lo);
    return samples[lo] + frac * (samples[hi] - samples[lo]);
}

ErrorStats summarize(std::span<const double> samples) {
    const std::size_t n = samples.size();
    if (n < 2) throw std::invalid_argument("summarize needs at least two samples");

    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= double(n);
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    const double std = std::sqrt(ss / double(n - 1));

    ErrorStats stats;
    stats.trials = n;
    stats.mean = mean;
    stats.std = std;
    stats.mean_stderr = std / std::sqrt(double(n));
    stats.std_stderr = std / std::sqrt(2.0 * double(n - 1));
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    for (double p : {0.5, 0.9, 0.99}) {
        const double h = p * double(n - 1);
        const std::size_t lo = std::size_t(std::floor(h));
        const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        stats.quantiles[p] = sorted[lo] + (h - double(lo)) * (sorted[hi] - sorted[lo]);
    }
    return stats;
}

double root_mean_square(std::span<const double> samples) {
    if (samples.empty())
        throw std::invalid_argument("root_mean_square of empty sample");
    double acc = 0.0;
    for (double x : samples) acc += x * x;
    return std::sqrt(acc / double(samples.size()));
}

}  // namespace tsd
