#include "tsd/bounds.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tsd/distributions.hpp"

namespace tsd {
namespace {

nlohmann::ordered_json json_number(double v) {
    if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
    return v;
}

}  // namespace

double stability_constant() {
    static const double value =
        std::sqrt(5.0 * M_E * M_E - 4.0 * M_E);
    return value;
}

BoundReport theorem_bounds(int n_factors, int dim, double epsilon_m,
                           double epsilon_t) {
    if (n_factors < 1 || dim < 1)
        throw std::invalid_argument("n_factors and dim must be >= 1");
    if (!(epsilon_m > 0.0) || !(epsilon_t > 0.0))
        throw std::invalid_argument("epsilon_m and epsilon_t must be positive");

    BoundReport report;
    report.n_factors = n_factors;
    report.dim = dim;
    report.epsilon_m = epsilon_m;
    report.epsilon_t = epsilon_t;

    const double log_thm2 = std::log(double(n_factors)) +
                            0.5 * double(n_factors - 1) * std::log(double(dim)) +
                            std::log(epsilon_m);
    report.thm2_lower = log_thm2 > std::log(DBL_MAX)
                            ? std::numeric_limits<double>::infinity()
                            : std::exp(log_thm2);
    report.thm3_upper = double(n_factors) * epsilon_m * stability_constant();
    report.cor5_upper = double(n_factors) * epsilon_m * std::sqrt(double(dim));
    report.cor4_epsilon_m = required_machine_epsilon(epsilon_t, n_factors, dim);
    const auto scalar = scalar_bounds(n_factors, epsilon_m);
    report.scalar_mean_lower = scalar.first;
    report.scalar_std_lower = scalar.second;
    return report;
}

double required_machine_epsilon(double epsilon_t, int n_factors, int dim) {
    if (!(epsilon_t > 0.0)) throw std::invalid_argument("epsilon_t must be positive");
    if (n_factors < 1 || dim < 1)
        throw std::invalid_argument("n_factors and dim must be >= 1");
    return epsilon_t /
           (double(n_factors) * std::sqrt(double(dim)) * stability_constant());
}

nlohmann::ordered_json bound_report_to_json(const BoundReport& report) {
    return {{"N", report.n_factors},
            {"dim", report.dim},
            {"epsilon_m", report.epsilon_m},
            {"epsilon_t", report.epsilon_t},
            {"thm2_lower", json_number(report.thm2_lower)},
            {"thm3_upper", json_number(report.thm3_upper)},
            {"cor5_upper", json_number(report.cor5_upper)},
            {"cor4_epsilon_m", json_number(report.cor4_epsilon_m)},
            {"scalar_mean_lower", json_number(report.scalar_mean_lower)},
            {"scalar_std_lower", json_number(report.scalar_std_lower)}};
}

}  // namespace tsd
