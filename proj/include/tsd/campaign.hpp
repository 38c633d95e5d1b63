#pragma once

#include <cstdint>
#include <vector>

#include "tsd/noise.hpp"
#include "tsd/stats.hpp"

namespace tsd {

struct CampaignOptions {
    std::uint32_t trials = 0;
    int threads = 1;
    bool collect_per_factor = false;   // one entry per (trial, factor)
    bool collect_scalar_ratio = false;  // dim-1 only: real part of the product ratio
};

struct CampaignResult {
    std::vector<double> epsilon;
    std::vector<double> epsilon_net;
    std::vector<double> per_factor_errors;  // trial-major when collected
    std::vector<double> scalar_ratio;
    ErrorStats stats;
    double ideal_error = 0.0;
    std::size_t factor_count = 0;
};

// Runs `trials` independent noisy products. Trials are assigned to threads in
// fixed blocks and results land in trial-indexed slots, so every output is
// bit-identical for any thread count.
CampaignResult run_campaign(const GeneratorSet& gens, const Schedule& schedule,
                            const NoiseSpec& spec, const CampaignOptions& options);

// Aggregated machine-error statistics; requires trials >= 100.
ErrorStats monte_carlo(const GeneratorSet& gens, const Schedule& schedule,
                       const NoiseSpec& spec, std::uint32_t trials,
                       int threads = 1);

}  // namespace tsd
