#pragma once

// Test-only reference implementations, kept independent of the library paths
// they check.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "tsd/complex_matrix.hpp"

namespace oracle {

using tsd::ComplexMatrix;
using tsd::cplx;

// Plain Taylor series after halving the argument until it is tiny, then
// squaring back. Shares nothing with the Pade path under test.
inline ComplexMatrix taylor_exp(const ComplexMatrix& m) {
    int halvings = 0;
    double scale = m.max_abs() * m.dim();
    while (scale > 0.25) {
        scale *= 0.5;
        ++halvings;
    }
    ComplexMatrix a = m;
    a.scale_real(std::ldexp(1.0, -halvings));

    ComplexMatrix result = ComplexMatrix::identity(m.dim());
    ComplexMatrix term = ComplexMatrix::identity(m.dim());
    for (int k = 1; k <= 40; ++k) {
        term = term * a;
        term.scale_real(1.0 / k);
        result += term;
        if (term.max_abs() < 1e-19) break;
    }
    for (int s = 0; s < halvings; ++s) result = result * result;
    return result;
}

// Random matrices for property tests; mt19937 keeps the oracle independent of
// the library's counter-based streams.
inline ComplexMatrix random_matrix(int dim, std::mt19937& gen, double spread = 1.0) {
    std::normal_distribution<double> normal(0.0, spread);
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = cplx(normal(gen), normal(gen));
    return m;
}

inline ComplexMatrix random_hermitian(int dim, std::mt19937& gen) {
    const ComplexMatrix g = random_matrix(dim, gen);
    ComplexMatrix h(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

// Composite Simpson on a smooth integrand.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int intervals) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / intervals;
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i)
        acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x,
                           const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(x[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y[i]) - my);
    }
    return sxy / sxx;
}

}  // namespace oracle
