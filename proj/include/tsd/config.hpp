#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsd/generators.hpp"
#include "tsd/noise.hpp"
#include "tsd/schedule.hpp"

namespace tsd {

// Generator sources a campaign can draw from.
struct GeneratorSource {
    enum class Type { random, excursion, hubbard_term, hubbard_split };
    Type type = Type::random;
    int dim = 2;
    int count = 1;
    GeneratorClass cls = GeneratorClass::hermitian;
    double norm = 1.0;
    std::uint64_t seed = 1;
    double t_h = 1.0;
    double u_h = 2.0;
};

enum class SweepAxis { none, n_factors, epsilon_m, lambda, k };

struct CampaignConfig {
    GeneratorSource source;
    OrderSpec spec;
    double lambda = 1.0;
    bool merge = false;
    NoiseSpec noise;
    std::uint32_t trials = 1000;
    std::optional<double> epsilon_t;
    SweepAxis sweep_axis = SweepAxis::none;
    std::vector<double> sweep_values;
    bool collect_per_factor = false;

    // ideal-error sweeps; empty lists fall back to the base value
    std::vector<double> lambda_values;
    std::vector<int> r_values;
    std::vector<int> k_values;
};

CampaignConfig campaign_config_from_json(const nlohmann::json& j);
CampaignConfig load_campaign_config(const std::string& path);

GeneratorSet build_generators(const GeneratorSource& source);

// Schedule and noise for one sweep point; `value` is ignored for axis none.
struct CampaignPoint {
    Schedule schedule;
    NoiseSpec noise;
};
CampaignPoint build_point(const CampaignConfig& config, SweepAxis axis,
                          double value);

std::string to_string(SweepAxis axis);

}  // namespace tsd
