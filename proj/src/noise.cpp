#include "tsd/noise.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "tsd/kernels.hpp"
#include "tsd/linalg.hpp"
#include "tsd/mat_exp.hpp"
#include "tsd/rng.hpp"
#include "tsd/spectral.hpp"

namespace tsd {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void fill_normals(std::vector<double>& normals, const RngStream& stream,
                  std::uint32_t trial, std::uint32_t factor_index, int dim) {
    normals.resize(2 * std::size_t(dim) * dim);
    std::size_t idx = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const GaussianPair pair = stream.gaussian_pair(
                trial, factor_index, std::uint32_t(i), std::uint32_t(j));
            normals[idx++] = pair.g0;
            normals[idx++] = pair.g1;
        }
}

ComplexMatrix gaussian_perturb(const ComplexMatrix& factor, double epsilon_m,
                               const RngStream& stream, std::uint32_t trial,
                               std::uint32_t factor_index,
                               std::vector<double>& normals) {
    fill_normals(normals, stream, trial, factor_index, factor.dim());
    ComplexMatrix out(factor.dim());
    kernels::active().perturb(factor.size(), factor.data(), normals.data(),
                              epsilon_m * kInvSqrt2, out.data());
    return out;
}

ComplexMatrix lognormal_perturb(const ComplexMatrix& factor, double epsilon_m,
                                const RngStream& stream, std::uint32_t trial,
                                std::uint32_t factor_index) {
    const int dim = factor.dim();
    ComplexMatrix out(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const GaussianPair pair = stream.gaussian_pair(
                trial, factor_index, std::uint32_t(i), std::uint32_t(j));
            out(i, j) = factor(i, j) * std::exp(epsilon_m * pair.g0);
        }
    return out;
}

}  // namespace

std::string to_string(NoiseMode mode) {
    switch (mode) {
        case NoiseMode::gaussian: return "gaussian";
        case NoiseMode::gaussian_unitary: return "gaussian_unitary";
        case NoiseMode::norm_stabilized: return "norm_stabilized";
        case NoiseMode::lognormal: return "lognormal";
    }
    throw std::logic_error("unreachable");
}

NoiseMode noise_mode_from_string(const std::string& name) {
    if (name == "gaussian") return NoiseMode::gaussian;
    if (name == "gaussian_unitary") return NoiseMode::gaussian_unitary;
    if (name == "norm_stabilized") return NoiseMode::norm_stabilized;
    if (name == "lognormal") return NoiseMode::lognormal;
    throw std::invalid_argument("unknown noise mode: " + name);
}

void NoiseSpec::validate() const {
    if (!(epsilon_m >= 0.0) || epsilon_m >= 0.5 || !std::isfinite(epsilon_m))
        throw std::invalid_argument("epsilon_m must lie in [0, 0.5)");
}

nlohmann::ordered_json noise_spec_to_json(const NoiseSpec& spec) {
    return {{"epsilon_m", spec.epsilon_m},
            {"mode", to_string(spec.mode)},
            {"master_seed", spec.master_seed}};
}

NoiseSpec noise_spec_from_json(const nlohmann::json& j) {
    NoiseSpec spec{j.at("epsilon_m").get<double>(),
                   noise_mode_from_string(j.at("mode").get<std::string>()),
                   j.at("master_seed").get<std::uint64_t>()};
    spec.validate();
    return spec;
}

ComplexMatrix perturb(const ComplexMatrix& factor, const NoiseSpec& spec,
                      std::uint32_t trial, std::uint32_t factor_index) {
    require_finite(factor, "perturb");
    spec.validate();
    if (spec.epsilon_m == 0.0) return factor;

    const RngStream stream(spec.master_seed, RngStream::kNoiseDomain);
    std::vector<double> normals;
    switch (spec.mode) {
        case NoiseMode::gaussian:
            return gaussian_perturb(factor, spec.epsilon_m, stream, trial,
                                    factor_index, normals);
        case NoiseMode::gaussian_unitary:
            return polar_factor(gaussian_perturb(factor, spec.epsilon_m, stream,
                                                 trial, factor_index, normals));
        case NoiseMode::norm_stabilized: {
            ComplexMatrix noisy = gaussian_perturb(factor, spec.epsilon_m, stream,
                                                   trial, factor_index, normals);
            const double noisy_norm = spectral_norm(noisy);
            if (noisy_norm == 0.0)
                throw std::runtime_error("norm_stabilized: perturbed factor is zero");
            noisy.scale_real(spectral_norm(factor) / noisy_norm);
            return noisy;
        }
        case NoiseMode::lognormal:
            return lognormal_perturb(factor, spec.epsilon_m, stream, trial,
                                     factor_index);
    }
    throw std::logic_error("unreachable");
}

CompiledSchedule compile_schedule(const GeneratorSet& gens,
                                  const Schedule& schedule) {
    if (gens.count() != schedule.m)
        throw std::invalid_argument("generator count does not match schedule");
    CompiledSchedule compiled;
    compiled.dim = gens.dim;

    std::map<std::pair<int, double>, ComplexMatrix> cache;
    compiled.factors.reserve(schedule.terms.size());
    for (const Term& t : schedule.terms) {
        const auto key = std::make_pair(t.generator, t.coefficient);
        auto it = cache.find(key);
        if (it == cache.end()) {
            ComplexMatrix scaled = gens.generators[t.generator];
            scaled.scale_real(t.coefficient);
            it = cache.emplace(key, mat_exp(scaled)).first;
        }
        compiled.factors.push_back(it->second);
    }
    compiled.factor_norms.reserve(compiled.factors.size());
    for (const ComplexMatrix& f : compiled.factors)
        compiled.factor_norms.push_back(spectral_norm(f));

    compiled.ideal_product = ComplexMatrix::identity(gens.dim);
    for (const ComplexMatrix& f : compiled.factors)
        compiled.ideal_product = f * compiled.ideal_product;
    compiled.ideal_product_norm = spectral_norm(compiled.ideal_product);

    compiled.flow = exact_flow(gens, schedule);
    compiled.flow_norm = spectral_norm(compiled.flow);
    compiled.ideal_error =
        spectral_norm(compiled.flow - compiled.ideal_product) / compiled.flow_norm;
    return compiled;
}

NoisyProductResult noisy_product(const CompiledSchedule& compiled,
                                 const NoiseSpec& spec, std::uint32_t trial,
                                 bool per_factor_errors) {
    spec.validate();
    NoisyProductResult result;
    result.ideal_product = compiled.ideal_product;

    ComplexMatrix noisy = ComplexMatrix::identity(compiled.dim);
    if (per_factor_errors)
        result.per_factor_rel_norm_error.reserve(compiled.factors.size());
    for (std::size_t p = 0; p < compiled.factors.size(); ++p) {
        const ComplexMatrix perturbed =
            perturb(compiled.factors[p], spec, trial, std::uint32_t(p));
        if (per_factor_errors)
            result.per_factor_rel_norm_error.push_back(
                spectral_norm(compiled.factors[p] - perturbed) /
                compiled.factor_norms[p]);
        noisy = perturbed * noisy;
    }

    result.machine_error = spectral_norm(compiled.ideal_product - noisy) /
                           compiled.ideal_product_norm;
    result.net_error = spectral_norm(compiled.flow - noisy) / compiled.flow_norm;
    result.noisy_product = std::move(noisy);
    return result;
}

NoisyProductResult noisy_product(const GeneratorSet& gens, const Schedule& schedule,
                                 const NoiseSpec& spec, std::uint32_t trial) {
    return noisy_product(compile_schedule(gens, schedule), spec, trial);
}

}  // namespace tsd
