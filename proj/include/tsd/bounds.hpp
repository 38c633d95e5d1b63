#pragma once

#include "json.hpp"

namespace tsd {

// Closed-form stability bounds for a product of n_factors exponentials on a
// dim-dimensional space with machine epsilon epsilon_m and tolerance epsilon_t.
struct BoundReport {
    int n_factors = 0;
    int dim = 0;
    double epsilon_m = 0.0;
    double epsilon_t = 0.0;
    double thm2_lower = 0.0;   // N * dim^((N-1)/2) * epsilon_m, worst case
    double thm3_upper = 0.0;   // N * epsilon_m * sqrt(5e^2 - 4e)
    double cor5_upper = 0.0;   // N * epsilon_m * sqrt(dim), unitary factors
    double cor4_epsilon_m = 0.0;  // machine epsilon sufficient for epsilon_t
    double scalar_mean_lower = 0.0;
    double scalar_std_lower = 0.0;
};

// sqrt(5e^2 - 4e)
double stability_constant();

// Evaluated in log space; thm2_lower saturates to +infinity when the closed
// form exceeds the double range.
BoundReport theorem_bounds(int n_factors, int dim, double epsilon_m,
                           double epsilon_t);

double required_machine_epsilon(double epsilon_t, int n_factors, int dim);

nlohmann::ordered_json bound_report_to_json(const BoundReport& report);

}  // namespace tsd
