#pragma once

#include <cstdint>

#include "tsd/generators.hpp"

namespace tsd {

// Random Hermitian with spectrum symmetrized about zero and rescaled so the
// extreme eigenvalues are exactly +/-1; both e^{+hA} and e^{-hA} then have
// spectral norm e^h.
ComplexMatrix balanced_hermitian(int dim, std::uint64_t seed);

// Single balanced Hermitian generator, for excursion schedules.
GeneratorSet excursion_generator_set(int dim, std::uint64_t seed);

// The two-site term split into its hopping and interaction parts, the natural
// two-generator decomposition of the flow.
GeneratorSet hubbard_split_generators(double t_h, double u_h);

}  // namespace tsd
