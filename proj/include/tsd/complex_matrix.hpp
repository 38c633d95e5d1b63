#pragma once

#include <complex>
#include <vector>

namespace tsd {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major storage. Values are immutable in
// spirit: library operations never mutate their inputs, so instances can be
// shared freely across threads.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    std::size_t size() const { return entries_.size(); }

    cplx& operator()(int i, int j) { return entries_[std::size_t(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const {
        return entries_[std::size_t(i) * dim_ + j];
    }
    cplx* data() { return entries_.data(); }
    const cplx* data() const { return entries_.data(); }

    ComplexMatrix adjoint() const;
    bool is_finite() const;
    double frobenius_norm() const;
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx factor);
    void scale_real(double factor);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(ComplexMatrix a, cplx factor) { return a *= factor; }
    friend ComplexMatrix operator*(cplx factor, ComplexMatrix a) { return a *= factor; }

    bool operator==(const ComplexMatrix& other) const = default;

  private:
    int dim_;
    std::vector<cplx> entries_;
};

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b);
void require_finite(const ComplexMatrix& m, const char* what);

}  // namespace tsd
