#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsd/complex_matrix.hpp"

namespace tsd {

enum class GeneratorClass { hermitian, skew_hermitian, general };

std::string to_string(GeneratorClass cls);
GeneratorClass generator_class_from_string(const std::string& name);

// The operators whose sum generates the exact flow.
struct GeneratorSet {
    int dim = 0;
    GeneratorClass cls = GeneratorClass::general;
    std::vector<ComplexMatrix> generators;

    int count() const { return int(generators.size()); }
    ComplexMatrix sum() const;
};

// Validates dimensions and the structural class (entrywise, 1e-12).
GeneratorSet make_generator_set(GeneratorClass cls,
                                std::vector<ComplexMatrix> generators);

// Gaussian entries, symmetrized per class, rescaled to spectral norm
// `norm_bound`. Deterministic in (master_seed, dim, count, class).
GeneratorSet sample_generator_set(int dim, int count, GeneratorClass cls,
                                  double norm_bound, std::uint64_t master_seed);

}  // namespace tsd
