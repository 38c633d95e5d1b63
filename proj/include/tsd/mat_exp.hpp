#pragma once

#include "tsd/complex_matrix.hpp"

namespace tsd {

// e^m by scaling-and-squaring with a diagonal Pade approximant. Relative
// spectral-norm accuracy is at the 1e-14 level for ||m|| <= 50. Throws
// std::range_error when ||m|| exceeds the overflow guard (700).
ComplexMatrix mat_exp(const ComplexMatrix& m);

}  // namespace tsd
