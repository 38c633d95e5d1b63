#include "tsd/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace tsd {
namespace {

constexpr int kQlMaxIterations = 50;

// Reduce a Hermitian matrix to real symmetric tridiagonal form by Householder
// similarities. Only eigenvalues are needed downstream, so transforms are not
// accumulated and subdiagonal phases are dropped (a diagonal unitary
// similarity makes them real without moving the spectrum).
void tridiagonalize(ComplexMatrix& h, std::vector<double>& diag,
                    std::vector<double>& off) {
    const int n = h.dim();
    diag.assign(n, 0.0);
    off.assign(n > 1 ? n - 1 : 0, 0.0);
    std::vector<cplx> w(n), p(n), q(n);

    for (int k = 0; k + 2 < n; ++k) {
        double colnorm_sq = 0.0;
        for (int i = k + 1; i < n; ++i) colnorm_sq += std::norm(h(i, k));
        const double colnorm = std::sqrt(colnorm_sq);
        if (colnorm == 0.0) {
            off[k] = 0.0;
            continue;
        }
        const cplx alpha = h(k + 1, k);
        const double aabs = std::abs(alpha);
        const cplx phase = aabs == 0.0 ? cplx(1.0, 0.0) : alpha / aabs;
        const cplx beta = -phase * colnorm;

        // v = x - beta*e1, normalized into w; |v0|^2 = (|alpha| + colnorm)^2
        const double vnorm_sq =
            colnorm_sq + colnorm * colnorm + 2.0 * aabs * colnorm;
        const double vnorm = std::sqrt(vnorm_sq);
        w[k + 1] = (alpha - beta) / vnorm;
        for (int i = k + 2; i < n; ++i) w[i] = h(i, k) / vnorm;

        h(k + 1, k) = beta;
        h(k, k + 1) = std::conj(beta);
        for (int i = k + 2; i < n; ++i) {
            h(i, k) = cplx(0.0, 0.0);
            h(k, i) = cplx(0.0, 0.0);
        }

        // Trailing block S <- S - 2(w q' + q w'), q = S w - (w' S w) w
        for (int i = k + 1; i < n; ++i) {
            cplx acc(0.0, 0.0);
            for (int j = k + 1; j < n; ++j) acc += h(i, j) * w[j];
            p[i] = acc;
        }
        double mu = 0.0;
        for (int i = k + 1; i < n; ++i)
            mu += std::real(std::conj(w[i]) * p[i]);
        for (int i = k + 1; i < n; ++i) q[i] = p[i] - mu * w[i];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                h(i, j) -= 2.0 * (w[i] * std::conj(q[j]) + q[i] * std::conj(w[j]));
            }
        }
    }

    for (int i = 0; i < n; ++i) diag[i] = std::real(h(i, i));
    for (int i = 0; i + 1 < n; ++i) off[i] = std::abs(h(i + 1, i));
}

// Implicit-shift QL on a real symmetric tridiagonal matrix; eigenvalues only.
void ql_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
    const int n = int(d.size());
    if (n <= 1) return;
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= DBL_EPSILON * dd) break;
            }
            if (m != l) {
                if (iter++ == kQlMaxIterations)
                    throw std::runtime_error("tridiagonal QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                bool underflow = false;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
}

double spectral_norm_2x2(const ComplexMatrix& m) {
    const double f = std::norm(m(0, 0)) + std::norm(m(0, 1)) + std::norm(m(1, 0)) +
                     std::norm(m(1, 1));
    const cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double g = std::norm(det);
    const double disc = std::max(f * f - 4.0 * g, 0.0);
    return std::sqrt(0.5 * (f + std::sqrt(disc)));
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    require_finite(h, "hermitian_eigenvalues");
    const int n = h.dim();
    ComplexMatrix sym(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sym(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    std::vector<double> d, e;
    tridiagonalize(sym, d, e);
    ql_eigenvalues(d, e);
    return d;
}

double spectral_norm(const ComplexMatrix& m) {
    require_finite(m, "spectral_norm");
    const int n = m.dim();
    if (n == 1) return std::abs(m(0, 0));
    if (n == 2) return spectral_norm_2x2(m);
    const ComplexMatrix gram = m.adjoint() * m;
    const std::vector<double> eig = hermitian_eigenvalues(gram);
    return std::sqrt(std::max(eig.back(), 0.0));
}

double relative_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
    require_same_dim(u, v);
    const double norm_u = spectral_norm(u);
    if (norm_u == 0.0)
        throw std::domain_error("relative_distance: reference operator is zero");
    return spectral_norm(u - v) / norm_u;
}

}  // namespace tsd
