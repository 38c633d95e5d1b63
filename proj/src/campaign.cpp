#include "tsd/campaign.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace tsd {

CampaignResult run_campaign(const GeneratorSet& gens, const Schedule& schedule,
                            const NoiseSpec& spec, const CampaignOptions& options) {
    if (options.trials == 0) throw std::invalid_argument("trials must be positive");
    if (options.threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (options.collect_scalar_ratio && gens.dim != 1)
        throw std::invalid_argument("scalar ratio collection needs dim == 1");
    spec.validate();

    const CompiledSchedule compiled = compile_schedule(gens, schedule);
    const std::size_t trials = options.trials;
    const std::size_t factors = compiled.factors.size();

    CampaignResult result;
    result.ideal_error = compiled.ideal_error;
    result.factor_count = factors;
    result.epsilon.resize(trials);
    result.epsilon_net.resize(trials);
    if (options.collect_per_factor) result.per_factor_errors.resize(trials * factors);
    if (options.collect_scalar_ratio) result.scalar_ratio.resize(trials);

    auto run_block = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            NoisyProductResult r = noisy_product(compiled, spec, std::uint32_t(t),
                                                 options.collect_per_factor);
            result.epsilon[t] = r.machine_error;
            result.epsilon_net[t] = r.net_error;
            if (options.collect_per_factor)
                std::copy(r.per_factor_rel_norm_error.begin(),
                          r.per_factor_rel_norm_error.end(),
                          result.per_factor_errors.begin() + t * factors);
            if (options.collect_scalar_ratio)
                result.scalar_ratio[t] =
                    std::real(r.noisy_product(0, 0) / r.ideal_product(0, 0));
        }
    };

    const int threads = int(std::min<std::size_t>(options.threads, trials));
    if (threads <= 1) {
        run_block(0, trials);
    } else {
        const std::size_t chunk = (trials + threads - 1) / threads;
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) {
            const std::size_t begin = std::size_t(w) * chunk;
            const std::size_t end = std::min(begin + chunk, trials);
            if (begin >= end) break;
            pool.emplace_back(run_block, begin, end);
        }
        for (std::thread& th : pool) th.join();
    }

    for (std::size_t t = 0; t < trials; ++t)
        if (!std::isfinite(result.epsilon[t]) || !std::isfinite(result.epsilon_net[t]))
            throw std::runtime_error("trial " + std::to_string(t) +
                                     " produced a non-finite error");

    result.stats = summarize(result.epsilon);
    return result;
}

ErrorStats monte_carlo(const GeneratorSet& gens, const Schedule& schedule,
                       const NoiseSpec& spec, std::uint32_t trials, int threads) {
    if (trials < 100) throw std::invalid_argument("monte_carlo needs trials >= 100");
    CampaignOptions options;
    options.trials = trials;
    options.threads = threads;
    return run_campaign(gens, schedule, spec, options).stats;
}

}  // namespace tsd
