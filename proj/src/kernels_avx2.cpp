#include "tsd/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>

namespace tsd::kernels {
namespace {

// Two complex doubles per __m256d, layout [re0, im0, re1, im1].

inline __m256d cplx_mul_acc(__m256d acc, double ar, double ai, __m256d b) {
    // (ar + i*ai) * (br + i*bi) accumulated onto acc
    const __m256d arv = _mm256_set1_pd(ar);
    const __m256d aiv = _mm256_set1_pd(ai);
    const __m256d bswap = _mm256_permute_pd(b, 0b0101);       // [im, re, im, re]
    const __m256d sign = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);  // negate even slots
    const __m256d bswapn = _mm256_xor_pd(bswap, sign);         // [-im, re, -im, re]
    acc = _mm256_fmadd_pd(arv, b, acc);
    acc = _mm256_fmadd_pd(aiv, bswapn, acc);
    return acc;
}

void cgemm_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    double* cd = reinterpret_cast<double*>(c);
    for (std::size_t i = 0; i < n * n; ++i) c[i] = cplx(0.0, 0.0);
    const std::size_t nvec = n - (n % 2);
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = cd + 2 * i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
            const double ar = aik.real(), ai = aik.imag();
            const double* brow = reinterpret_cast<const double*>(b + k * n);
            std::size_t j = 0;
            for (; j < nvec; j += 2) {
                __m256d acc = _mm256_loadu_pd(crow + 2 * j);
                acc = cplx_mul_acc(acc, ar, ai, _mm256_loadu_pd(brow + 2 * j));
                _mm256_storeu_pd(crow + 2 * j, acc);
            }
            for (; j < n; ++j) {
                const double br = brow[2 * j], bi = brow[2 * j + 1];
                crow[2 * j] = std::fma(ar, br, std::fma(-ai, bi, crow[2 * j]));
                crow[2 * j + 1] = std::fma(ar, bi, std::fma(ai, br, crow[2 * j + 1]));
            }
        }
    }
}

void perturb_avx2(std::size_t count, const cplx* in, const double* normals,
                  double sigma, cplx* out) {
    const double* ind = reinterpret_cast<const double*>(in);
    double* outd = reinterpret_cast<double*>(out);
    const __m256d sv = _mm256_set1_pd(sigma);
    const std::size_t nvec = count - (count % 2);
    std::size_t i = 0;
    for (; i < nvec; i += 2) {
        const __m256d z = _mm256_loadu_pd(ind + 2 * i);
        const __m256d sq = _mm256_mul_pd(z, z);
        // [re0^2+im0^2, ., re1^2+im1^2, .] duplicated within each lane
        const __m256d sums = _mm256_hadd_pd(sq, sq);
        const __m256d mag = _mm256_sqrt_pd(sums);
        const __m256d g = _mm256_loadu_pd(normals + 2 * i);
        const __m256d noise = _mm256_mul_pd(_mm256_mul_pd(sv, mag), g);
        _mm256_storeu_pd(outd + 2 * i, _mm256_add_pd(z, noise));
    }
    for (; i < count; ++i) {
        const double re = ind[2 * i], im = ind[2 * i + 1];
        const double s = sigma * std::sqrt(re * re + im * im);
        outd[2 * i] = re + s * normals[2 * i];
        outd[2 * i + 1] = im + s * normals[2 * i + 1];
    }
}

void scale_avx2(std::size_t count, double factor, cplx* x) {
    double* xd = reinterpret_cast<double*>(x);
    const __m256d fv = _mm256_set1_pd(factor);
    const std::size_t total = 2 * count;
    std::size_t i = 0;
    for (; i + 4 <= total; i += 4)
        _mm256_storeu_pd(xd + i, _mm256_mul_pd(fv, _mm256_loadu_pd(xd + i)));
    for (; i < total; ++i) xd[i] *= factor;
}

double frob_norm_sq_avx2(std::size_t count, const cplx* x) {
    const double* xd = reinterpret_cast<const double*>(x);
    const std::size_t total = 2 * count;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= total; i += 4) {
        const __m256d v = _mm256_loadu_pd(xd + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < total; ++i) sum += xd[i] * xd[i];
    return sum;
}

}  // namespace

const KernelTable* avx2_table() {
    static const KernelTable table{"avx2", cgemm_avx2, perturb_avx2, scale_avx2,
                                   frob_norm_sq_avx2};
    return &table;
}

}  // namespace tsd::kernels

#else

namespace tsd::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace tsd::kernels

#endif
