#pragma once

#include <complex>
#include <cstddef>

// Low-level arithmetic kernels on interleaved complex<double> arrays.
// Each entry point has a scalar reference implementation and, on x86-64
// machines with AVX2+FMA, a vector variant. The active table is chosen
// once at startup; the TSD_KERNELS environment variable ("auto", "scalar",
// "avx2") overrides the automatic choice. Vector variants follow the same
// accumulation order as the reference so results agree to rounding.

namespace tsd::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    const char* name;
    // c = a * b, all n-by-n row-major, c must not alias a or b
    void (*cgemm)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
    // out[i] = in[i] + sigma * |in[i]| * (normals[2i] + i*normals[2i+1]);
    // entries that are exactly zero stay exactly zero
    void (*perturb)(std::size_t count, const cplx* in, const double* normals,
                    double sigma, cplx* out);
    void (*scale)(std::size_t count, double factor, cplx* x);
    double (*frob_norm_sq)(std::size_t count, const cplx* x);
};

const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when unsupported
const KernelTable& active();

}  // namespace tsd::kernels
