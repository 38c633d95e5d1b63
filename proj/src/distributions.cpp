#include "tsd/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace tsd {
namespace {

void check_params(int n_factors, double epsilon_m) {
    if (n_factors < 1) throw std::invalid_argument("factor count must be >= 1");
    if (!(epsilon_m > 0.0) || !std::isfinite(epsilon_m))
        throw std::invalid_argument("epsilon_m must be positive");
}

// One log branch evaluated as exp(-ln(w)^2 / (2 s^2) - ln(w)) so the
// 1/w prefactor cannot overflow near w = 0.
double log_branch(double w, double sigma_sq) {
    const double lw = std::log(w);
    return std::exp(-lw * lw / (2.0 * sigma_sq) - lw);
}

}  // namespace

double lognormal_pdf(double x, int n_factors, double epsilon_m) {
    check_params(n_factors, epsilon_m);
    if (!(x > 0.0)) throw std::invalid_argument("lognormal_pdf needs x > 0");
    const double sigma_sq = double(n_factors) * epsilon_m * epsilon_m;
    const double front = 1.0 / (std::sqrt(2.0 * M_PI * n_factors) * epsilon_m);
    return front * log_branch(x, sigma_sq);
}

double folded_lognormal_pdf(double eps, int n_factors, double epsilon_m) {
    check_params(n_factors, epsilon_m);
    if (!std::isfinite(eps)) throw std::invalid_argument("eps must be finite");
    if (eps <= 0.0) return 0.0;
    const double sigma_sq = double(n_factors) * epsilon_m * epsilon_m;
    const double front = 1.0 / (std::sqrt(2.0 * M_PI * n_factors) * epsilon_m);
    double value = log_branch(1.0 + eps, sigma_sq);
    if (eps < 1.0) value += log_branch(1.0 - eps, sigma_sq);
    return front * value;
}

double folded_lognormal_cdf(double eps, int n_factors, double epsilon_m) {
    check_params(n_factors, epsilon_m);
    if (eps <= 0.0) return 0.0;
    const double s = std::sqrt(double(n_factors)) * epsilon_m;
    const double upper = normal_cdf(std::log1p(eps) / s);
    if (eps >= 1.0) return upper;
    return upper - normal_cdf(std::log1p(-eps) / s);
}

std::pair<double, double> scalar_bounds(int n_factors, double epsilon_m) {
    if (n_factors < 1) throw std::invalid_argument("factor count must be >= 1");
    if (!(epsilon_m >= 0.0)) throw std::invalid_argument("epsilon_m must be >= 0");
    const double s = double(n_factors) * epsilon_m * epsilon_m;
    const double mean_lower = std::expm1(s / 2.0);
    const double radicand =
        std::exp(2.0 * s) - std::exp(s) - 2.0 * std::exp(s / 2.0) + 1.0;
    const double std_lower = radicand > 0.0 ? std::sqrt(radicand) : 0.0;
    return {mean_lower, std_lower};
}

double single_factor_norm_pdf(double x, double epsilon_m, int dim) {
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (!(epsilon_m > 0.0)) throw std::invalid_argument("epsilon_m must be positive");
    const double scale_sq = epsilon_m * epsilon_m * double(dim);
    const double radius = 2.0 * std::sqrt(scale_sq);
    if (x < 0.0 || x > radius) return 0.0;
    return std::sqrt(radius * radius - x * x) / (M_PI * scale_sq);
}

double single_factor_norm_cdf(double x, double epsilon_m, int dim) {
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (!(epsilon_m > 0.0)) throw std::invalid_argument("epsilon_m must be positive");
    const double scale_sq = epsilon_m * epsilon_m * double(dim);
    const double radius = 2.0 * std::sqrt(scale_sq);
    if (x <= 0.0) return 0.0;
    if (x >= radius) return 1.0;
    return (x * std::sqrt(radius * radius - x * x) +
            radius * radius * std::asin(x / radius)) /
           (2.0 * M_PI * scale_sq);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace tsd
