#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tsd/kernels.hpp"

using tsd::cplx;
namespace kn = tsd::kernels;

namespace {

std::vector<cplx> random_block(std::size_t count, std::mt19937& gen) {
    std::normal_distribution<double> normal;
    std::vector<cplx> out(count);
    for (cplx& z : out) z = cplx(normal(gen), normal(gen));
    return out;
}

}  // namespace

TEST_CASE("active kernel table is valid") {
    const kn::KernelTable& table = kn::active();
    CHECK(table.cgemm != nullptr);
    CHECK(table.perturb != nullptr);
    CHECK(table.scale != nullptr);
    CHECK(table.frob_norm_sq != nullptr);
}

TEST_CASE("vector kernels agree with the scalar reference") {
    const kn::KernelTable* avx2 = kn::avx2_table();
    if (avx2 == nullptr) return;  // nothing to compare on this platform
    const kn::KernelTable& ref = kn::scalar_table();
    std::mt19937 gen(991);

    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 16u, 33u, 64u}) {
        const auto a = random_block(n * n, gen);
        const auto b = random_block(n * n, gen);
        std::vector<cplx> c_ref(n * n), c_vec(n * n);
        ref.cgemm(n, a.data(), b.data(), c_ref.data());
        avx2->cgemm(n, a.data(), b.data(), c_vec.data());
        double scale = 0.0, diff = 0.0;
        for (std::size_t i = 0; i < n * n; ++i) {
            scale = std::max(scale, std::abs(c_ref[i]));
            diff = std::max(diff, std::abs(c_ref[i] - c_vec[i]));
        }
        CHECK(diff <= 1e-13 * std::max(scale, 1.0) * double(n));
    }

    for (std::size_t count : {1u, 2u, 9u, 64u, 4096u}) {
        const auto in = random_block(count, gen);
        std::vector<double> normals(2 * count);
        std::normal_distribution<double> normal;
        for (double& g : normals) g = normal(gen);
        std::vector<cplx> out_ref(count), out_vec(count);
        ref.perturb(count, in.data(), normals.data(), 1e-3, out_ref.data());
        avx2->perturb(count, in.data(), normals.data(), 1e-3, out_vec.data());
        for (std::size_t i = 0; i < count; ++i)
            CHECK(std::abs(out_ref[i] - out_vec[i]) <= 1e-15);

        auto x_ref = in, x_vec = in;
        ref.scale(count, 0.37, x_ref.data());
        avx2->scale(count, 0.37, x_vec.data());
        CHECK(x_ref == x_vec);

        const double f_ref = ref.frob_norm_sq(count, in.data());
        const double f_vec = avx2->frob_norm_sq(count, in.data());
        CHECK(f_vec == doctest::Approx(f_ref).epsilon(1e-13));
    }
}

TEST_CASE("perturb keeps exact zeros exactly zero") {
    for (const kn::KernelTable* table : {&kn::scalar_table(), kn::avx2_table()}) {
        if (table == nullptr) continue;
        std::vector<cplx> in = {cplx(0, 0), cplx(1, 2), cplx(0, 0), cplx(-3, 0)};
        std::vector<double> normals(8, 1.7);
        std::vector<cplx> out(4);
        table->perturb(4, in.data(), normals.data(), 0.1, out.data());
        CHECK(out[0] == cplx(0, 0));
        CHECK(out[2] == cplx(0, 0));
        CHECK(out[1] != in[1]);
    }
}

TEST_CASE("cgemm matches a plain triple loop") {
    std::mt19937 gen(17);
    for (std::size_t n : {1u, 3u, 6u}) {
        const auto a = random_block(n * n, gen);
        const auto b = random_block(n * n, gen);
        std::vector<cplx> expect(n * n, cplx(0, 0)), got(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    expect[i * n + j] += a[i * n + k] * b[k * n + j];
        kn::active().cgemm(n, a.data(), b.data(), got.data());
        for (std::size_t i = 0; i < n * n; ++i)
            CHECK(std::abs(expect[i] - got[i]) <= 1e-12);
    }
}
