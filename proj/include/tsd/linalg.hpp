#pragma once

#include "tsd/complex_matrix.hpp"

namespace tsd {

// Solve a * x = b by LU with partial pivoting.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix inverse(const ComplexMatrix& a);

// Unitary polar factor (the nearest unitary in Frobenius distance).
// Newton iteration far from unitarity, Newton-Schulz once close.
ComplexMatrix polar_factor(const ComplexMatrix& m);

}  // namespace tsd
