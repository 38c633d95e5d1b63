#pragma once

#include <vector>

#include "tsd/complex_matrix.hpp"

namespace tsd {

// Largest singular value, computed from the eigenvalues of M'M. Deterministic:
// Householder tridiagonalization followed by implicit-shift QL with a fixed
// iteration cap.
double spectral_norm(const ComplexMatrix& m);

// ||u - v|| / ||u|| in the spectral norm. Throws std::domain_error when u = 0.
double relative_distance(const ComplexMatrix& u, const ComplexMatrix& v);

// Ascending eigenvalues of the Hermitian part (h + h')/2.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

}  // namespace tsd
