#include "tsd/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tsd {
namespace {

struct LuFactors {
    ComplexMatrix lu;
    std::vector<int> pivots;
};

LuFactors lu_factor(ComplexMatrix a) {
    const int n = a.dim();
    std::vector<int> piv(n);
    for (int k = 0; k < n; ++k) {
        int best = k;
        double best_mag = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double mag = std::abs(a(i, k));
            if (mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
        piv[k] = best;
        if (best != k)
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(best, j));
        if (best_mag == 0.0) throw std::runtime_error("lu_factor: singular matrix");
        const cplx inv_pivot = cplx(1.0, 0.0) / a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx factor = a(i, k) * inv_pivot;
            a(i, k) = factor;
            for (int j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return {std::move(a), std::move(piv)};
}

ComplexMatrix lu_solve(const LuFactors& f, ComplexMatrix b) {
    const int n = f.lu.dim();
    for (int k = 0; k < n; ++k)
        if (f.pivots[k] != k)
            for (int j = 0; j < n; ++j) std::swap(b(k, j), b(f.pivots[k], j));
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i)
            for (int j = 0; j < n; ++j) b(i, j) -= f.lu(i, k) * b(k, j);
    for (int k = n - 1; k >= 0; --k) {
        const cplx inv_pivot = cplx(1.0, 0.0) / f.lu(k, k);
        for (int j = 0; j < n; ++j) b(k, j) *= inv_pivot;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) b(i, j) -= f.lu(i, k) * b(k, j);
    }
    return b;
}

double unitarity_defect(const ComplexMatrix& x) {
    ComplexMatrix g = x.adjoint() * x;
    for (int i = 0; i < g.dim(); ++i) g(i, i) -= cplx(1.0, 0.0);
    return g.frobenius_norm();
}

}  // namespace

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    return lu_solve(lu_factor(a), b);
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    return solve(a, ComplexMatrix::identity(a.dim()));
}

ComplexMatrix polar_factor(const ComplexMatrix& m) {
    require_finite(m, "polar_factor");
    const int n = m.dim();
    if (n == 1) {
        const double mag = std::abs(m(0, 0));
        if (mag == 0.0) throw std::runtime_error("polar_factor: zero input");
        ComplexMatrix u(1);
        u(0, 0) = m(0, 0) / mag;
        return u;
    }
    ComplexMatrix x = m;
    const double tol = 1e-13 * std::sqrt(double(n));
    for (int iter = 0; iter < 60; ++iter) {
        const double defect = unitarity_defect(x);
        if (defect <= tol) return x;
        if (defect < 0.3) {
            // Newton-Schulz: x <- x (3I - x'x) / 2
            ComplexMatrix g = x.adjoint() * x;
            g.scale_real(-1.0);
            for (int i = 0; i < n; ++i) g(i, i) += cplx(3.0, 0.0);
            x = x * g;
            x.scale_real(0.5);
        } else {
            // Newton: x <- (x + inv(x)') / 2
            x += inverse(x).adjoint();
            x.scale_real(0.5);
        }
    }
    throw std::runtime_error("polar_factor: iteration did not converge");
}

}  // namespace tsd
