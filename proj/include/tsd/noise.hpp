#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsd/complex_matrix.hpp"
#include "tsd/schedule.hpp"

namespace tsd {

// gaussian: additive entrywise noise, std epsilon_m * |entry| split equally
//           between real and imaginary parts. Zero entries stay exactly zero.
// gaussian_unitary: gaussian followed by projection to the nearest unitary.
// norm_stabilized: gaussian rescaled back to the ideal factor's spectral norm.
// lognormal: multiplicative entrywise factor exp(epsilon_m * g); the relative
//            perturbation matches gaussian to first order and the product of
//            scalar factors follows the log-normal law exactly.
enum class NoiseMode { gaussian, gaussian_unitary, norm_stabilized, lognormal };

std::string to_string(NoiseMode mode);
NoiseMode noise_mode_from_string(const std::string& name);

struct NoiseSpec {
    double epsilon_m = 0.0;
    NoiseMode mode = NoiseMode::gaussian;
    std::uint64_t master_seed = 0;

    void validate() const;
};

nlohmann::ordered_json noise_spec_to_json(const NoiseSpec& spec);
NoiseSpec noise_spec_from_json(const nlohmann::json& j);

// Perturbed copy of one factor. The noise stream is a pure function of
// (master_seed, trial, factor_index, row, column).
ComplexMatrix perturb(const ComplexMatrix& factor, const NoiseSpec& spec,
                      std::uint32_t trial, std::uint32_t factor_index);

struct NoisyProductResult {
    ComplexMatrix ideal_product{1};
    ComplexMatrix noisy_product{1};
    double machine_error = 0.0;
    double net_error = 0.0;
    std::vector<double> per_factor_rel_norm_error;
};

// Factor exponentials and reference quantities computed once per schedule so
// Monte Carlo trials only pay for perturbation and products.
struct CompiledSchedule {
    int dim = 0;
    std::vector<ComplexMatrix> factors;
    std::vector<double> factor_norms;
    ComplexMatrix ideal_product{1};
    double ideal_product_norm = 0.0;
    ComplexMatrix flow{1};
    double flow_norm = 0.0;
    double ideal_error = 0.0;
};

CompiledSchedule compile_schedule(const GeneratorSet& gens, const Schedule& schedule);

NoisyProductResult noisy_product(const CompiledSchedule& compiled,
                                 const NoiseSpec& spec, std::uint32_t trial,
                                 bool per_factor_errors = true);

NoisyProductResult noisy_product(const GeneratorSet& gens, const Schedule& schedule,
                                 const NoiseSpec& spec, std::uint32_t trial);

}  // namespace tsd
