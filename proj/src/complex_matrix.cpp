#include "tsd/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "tsd/kernels.hpp"

namespace tsd {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    entries_.assign(std::size_t(dim) * dim, cplx(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = cplx(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

bool ComplexMatrix::is_finite() const {
    for (const cplx& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double ComplexMatrix::frobenius_norm() const {
    return std::sqrt(kernels::active().frob_norm_sq(entries_.size(), entries_.data()));
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const cplx& z : entries_) best = std::max(best, std::abs(z));
    return best;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx factor) {
    if (factor.imag() == 0.0) {
        scale_real(factor.real());
    } else {
        for (cplx& z : entries_) z *= factor;
    }
    return *this;
}

void ComplexMatrix::scale_real(double factor) {
    kernels::active().scale(entries_.size(), factor, entries_.data());
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix c(a.dim());
    kernels::active().cgemm(std::size_t(a.dim()), a.data(), b.data(), c.data());
    return c;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix dimension mismatch");
}

void require_finite(const ComplexMatrix& m, const char* what) {
    if (!m.is_finite())
        throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

}  // namespace tsd
