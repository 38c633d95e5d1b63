#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "tsd/campaign.hpp"
#include "tsd/growth.hpp"

namespace tsd::repro {

// Fixed-seed campaigns behind the `repro` subcommand. The same runners back
// the acceptance suite so command-line output and test assertions cannot
// drift apart. Passing trials = 0 selects each campaign's default count.

constexpr std::uint64_t kDefaultSeed = 20260810;

struct ScalarCampaign {
    int n_factors;
    NoiseSpec noise;
    Schedule schedule;
    CampaignResult result;
    double mean_x;
    double std_x;
    double ks_folded;
};
ScalarCampaign run_scalar(std::uint64_t seed, std::uint32_t trials, int threads);

struct Lemma1Point {
    int dim;
    double epsilon_m;
    CampaignResult result;
    double rms;               // second moment of per-factor relative norm error
    double support_fraction;  // share of samples below 1.1 * 2 eps sqrt(dim)
};
std::vector<Lemma1Point> run_lemma1(std::uint64_t seed, std::uint32_t trials,
                                    int threads);

struct SweepPoint {
    int n_factors;
    ErrorStats stats;
};

struct InstabilitySweep {
    double factor_norm;
    std::vector<SweepPoint> points;
    GrowthFit fit;
};
InstabilitySweep run_instability(std::uint64_t seed, std::uint32_t trials,
                                 int threads);

struct StabilizedSweep {
    int dim;
    NoiseMode mode;
    double epsilon_m;
    std::vector<SweepPoint> points;
    GrowthFit fit;
};
std::vector<StabilizedSweep> run_stabilized(std::uint64_t seed,
                                            std::uint32_t trials, int threads);

struct BudgetCampaign {
    double epsilon_t;
    double epsilon_m;
    ErrorStats stats;
};
BudgetCampaign run_budget(std::uint64_t seed, std::uint32_t trials, int threads);

// Runs all five campaigns and writes their CSV/JSON outputs under `out`.
void write_all(const std::filesystem::path& out, std::uint64_t seed,
               std::uint32_t trials, int threads);

}  // namespace tsd::repro
