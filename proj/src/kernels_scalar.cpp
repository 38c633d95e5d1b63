#include "tsd/kernels.hpp"

#include <cmath>

namespace tsd::kernels {
namespace {

// Loop order is (i, k, j): every c[i][j] accumulates contributions in
// ascending k, the same order the vector variant uses.
void cgemm_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    for (std::size_t i = 0; i < n * n; ++i) c[i] = cplx(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
            const double ar = aik.real(), ai = aik.imag();
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                const double br = brow[j].real(), bi = brow[j].imag();
                crow[j] += cplx(ar * br - ai * bi, ar * bi + ai * br);
            }
        }
    }
}

void perturb_scalar(std::size_t count, const cplx* in, const double* normals,
                    double sigma, cplx* out) {
    for (std::size_t i = 0; i < count; ++i) {
        const double re = in[i].real(), im = in[i].imag();
        const double mag = std::sqrt(re * re + im * im);
        const double s = sigma * mag;
        out[i] = cplx(re + s * normals[2 * i], im + s * normals[2 * i + 1]);
    }
}

void scale_scalar(std::size_t count, double factor, cplx* x) {
    for (std::size_t i = 0; i < count; ++i)
        x[i] = cplx(x[i].real() * factor, x[i].imag() * factor);
}

double frob_norm_sq_scalar(std::size_t count, const cplx* x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{"scalar", cgemm_scalar, perturb_scalar,
                                   scale_scalar, frob_norm_sq_scalar};
    return table;
}

}  // namespace tsd::kernels
