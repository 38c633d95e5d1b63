#include "tsd/config.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "tsd/hubbard.hpp"
#include "tsd/models.hpp"

namespace tsd {
namespace {

GeneratorSource parse_source(const nlohmann::json& j) {
    GeneratorSource source;
    const std::string type = j.at("type").get<std::string>();
    if (type == "random") {
        source.type = GeneratorSource::Type::random;
        source.dim = j.at("dim").get<int>();
        source.count = j.at("count").get<int>();
        source.cls = generator_class_from_string(j.at("class").get<std::string>());
        source.norm = j.value("norm", 1.0);
        source.seed = j.at("seed").get<std::uint64_t>();
    } else if (type == "excursion") {
        source.type = GeneratorSource::Type::excursion;
        source.dim = j.at("dim").get<int>();
        source.count = 1;
        source.seed = j.at("seed").get<std::uint64_t>();
    } else if (type == "hubbard_term" || type == "hubbard_split") {
        source.type = type == "hubbard_term" ? GeneratorSource::Type::hubbard_term
                                             : GeneratorSource::Type::hubbard_split;
        source.dim = 4;
        source.count = type == "hubbard_term" ? 1 : 2;
        source.t_h = j.at("t_h").get<double>();
        source.u_h = j.at("u_h").get<double>();
    } else {
        throw std::invalid_argument("unknown generator source type: " + type);
    }
    return source;
}

OrderSpec parse_spec(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "trotter") return OrderSpec::trotter(j.value("r", 1));
    if (type == "suzuki") return OrderSpec::suzuki(j.at("k").get<int>(), j.value("r", 1));
    if (type == "excursion") return OrderSpec::excursion(j.at("steps").get<int>());
    throw std::invalid_argument("unknown schedule type: " + type);
}

int schedule_size_for(const CampaignConfig& config, int n) {
    const OrderSpec& spec = config.spec;
    switch (spec.kind) {
        case OrderSpec::Kind::trotter: {
            if (n % config.source.count != 0)
                throw std::invalid_argument(
                    "N must be a multiple of the generator count");
            return n / config.source.count;
        }
        case OrderSpec::Kind::suzuki: {
            int block = 2 * config.source.count;
            for (int i = 1; i < spec.k; ++i) block *= 5;
            if (n % block != 0)
                throw std::invalid_argument(
                    "N must be a multiple of the suzuki block size");
            return n / block;
        }
        case OrderSpec::Kind::excursion:
            return n;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::none: return "none";
        case SweepAxis::n_factors: return "N";
        case SweepAxis::epsilon_m: return "epsilon_m";
        case SweepAxis::lambda: return "lambda";
        case SweepAxis::k: return "k";
    }
    throw std::logic_error("unreachable");
}

CampaignConfig campaign_config_from_json(const nlohmann::json& j) {
    CampaignConfig config;
    config.source = parse_source(j.at("generators"));
    config.spec = parse_spec(j.at("schedule"));
    config.lambda = j.at("lambda").get<double>();
    config.merge = j.value("merge", false);
    if (j.contains("noise")) config.noise = noise_spec_from_json(j.at("noise"));
    config.trials = j.value("trials", 1000u);
    if (j.contains("epsilon_t")) config.epsilon_t = j.at("epsilon_t").get<double>();
    config.collect_per_factor = j.value("collect_per_factor", false);

    if (j.contains("sweep")) {
        const auto& sweep = j.at("sweep");
        const std::string axis = sweep.at("axis").get<std::string>();
        if (axis == "N") config.sweep_axis = SweepAxis::n_factors;
        else if (axis == "epsilon_m") config.sweep_axis = SweepAxis::epsilon_m;
        else if (axis == "lambda") config.sweep_axis = SweepAxis::lambda;
        else if (axis == "k") config.sweep_axis = SweepAxis::k;
        else throw std::invalid_argument("unknown sweep axis: " + axis);
        config.sweep_values = sweep.at("values").get<std::vector<double>>();
        if (config.sweep_values.empty())
            throw std::invalid_argument("sweep values must be non-empty");
    }
    if (j.contains("lambda_values"))
        config.lambda_values = j.at("lambda_values").get<std::vector<double>>();
    if (j.contains("r_values"))
        config.r_values = j.at("r_values").get<std::vector<int>>();
    if (j.contains("k_values"))
        config.k_values = j.at("k_values").get<std::vector<int>>();
    return config;
}

CampaignConfig load_campaign_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    return campaign_config_from_json(j);
}

GeneratorSet build_generators(const GeneratorSource& source) {
    switch (source.type) {
        case GeneratorSource::Type::random:
            return sample_generator_set(source.dim, source.count, source.cls,
                                        source.norm, source.seed);
        case GeneratorSource::Type::excursion:
            return excursion_generator_set(source.dim, source.seed);
        case GeneratorSource::Type::hubbard_term:
            return make_generator_set(GeneratorClass::hermitian,
                                      {hubbard_term_matrix(source.t_h, source.u_h)});
        case GeneratorSource::Type::hubbard_split:
            return hubbard_split_generators(source.t_h, source.u_h);
    }
    throw std::logic_error("unreachable");
}

CampaignPoint build_point(const CampaignConfig& config, SweepAxis axis,
                          double value) {
    OrderSpec spec = config.spec;
    double lambda = config.lambda;
    NoiseSpec noise = config.noise;
    switch (axis) {
        case SweepAxis::none:
            break;
        case SweepAxis::n_factors: {
            const int n = int(std::lround(value));
            const int size = schedule_size_for(config, n);
            if (spec.kind == OrderSpec::Kind::excursion) spec.steps = size;
            else spec.r = size;
            break;
        }
        case SweepAxis::epsilon_m:
            noise.epsilon_m = value;
            break;
        case SweepAxis::lambda:
            lambda = value;
            break;
        case SweepAxis::k:
            if (spec.kind != OrderSpec::Kind::suzuki)
                throw std::invalid_argument("k sweep needs a suzuki schedule");
            spec.k = int(std::lround(value));
            break;
    }
    return {build_schedule(config.source.count, spec, lambda, config.merge), noise};
}

}  // namespace tsd
