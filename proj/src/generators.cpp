#include "tsd/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "tsd/rng.hpp"
#include "tsd/spectral.hpp"

namespace tsd {
namespace {

constexpr double kClassTolerance = 1e-12;

void check_class(const ComplexMatrix& a, GeneratorClass cls) {
    if (cls == GeneratorClass::general) return;
    const double sign = cls == GeneratorClass::hermitian ? 1.0 : -1.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (std::abs(a(i, j) - sign * std::conj(a(j, i))) > kClassTolerance)
                throw std::invalid_argument(
                    "generator violates its declared structural class");
}

}  // namespace

std::string to_string(GeneratorClass cls) {
    switch (cls) {
        case GeneratorClass::hermitian: return "hermitian";
        case GeneratorClass::skew_hermitian: return "skew_hermitian";
        case GeneratorClass::general: return "general";
    }
    throw std::logic_error("unreachable");
}

GeneratorClass generator_class_from_string(const std::string& name) {
    if (name == "hermitian") return GeneratorClass::hermitian;
    if (name == "skew_hermitian") return GeneratorClass::skew_hermitian;
    if (name == "general") return GeneratorClass::general;
    throw std::invalid_argument("unknown generator class: " + name);
}

ComplexMatrix GeneratorSet::sum() const {
    if (generators.empty()) throw std::logic_error("empty generator set");
    ComplexMatrix total = generators.front();
    for (std::size_t i = 1; i < generators.size(); ++i) total += generators[i];
    return total;
}

GeneratorSet make_generator_set(GeneratorClass cls,
                                std::vector<ComplexMatrix> generators) {
    if (generators.empty())
        throw std::invalid_argument("generator set needs at least one operator");
    const int dim = generators.front().dim();
    for (const ComplexMatrix& a : generators) {
        if (a.dim() != dim)
            throw std::invalid_argument("generators must share one dimension");
        require_finite(a, "generator");
        check_class(a, cls);
    }
    return GeneratorSet{dim, cls, std::move(generators)};
}

GeneratorSet sample_generator_set(int dim, int count, GeneratorClass cls,
                                  double norm_bound, std::uint64_t master_seed) {
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    if (!(norm_bound > 0.0) || !std::isfinite(norm_bound))
        throw std::invalid_argument("norm_bound must be positive and finite");

    const RngStream stream(master_seed, RngStream::kGeneratorDomain);
    std::vector<ComplexMatrix> mats;
    mats.reserve(count);
    for (int g = 0; g < count; ++g) {
        ComplexMatrix raw(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                const GaussianPair pair =
                    stream.gaussian_pair(std::uint32_t(g), std::uint32_t(i),
                                         std::uint32_t(j), 0);
                raw(i, j) = cplx(pair.g0, pair.g1);
            }
        ComplexMatrix a = raw;
        if (cls != GeneratorClass::general) {
            const double sign = cls == GeneratorClass::hermitian ? 1.0 : -1.0;
            const ComplexMatrix adj = raw.adjoint();
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    a(i, j) = 0.5 * (raw(i, j) + sign * adj(i, j));
        }
        const double norm = spectral_norm(a);
        if (norm == 0.0)
            throw std::runtime_error("sampled a zero generator; change the seed");
        a.scale_real(norm_bound / norm);
        mats.push_back(std::move(a));
    }
    return GeneratorSet{dim, cls, std::move(mats)};
}

}  // namespace tsd
