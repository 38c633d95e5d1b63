#include <cmath>
#include <complex>
#include <random>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "tsd/generators.hpp"
#include "tsd/linalg.hpp"
#include "tsd/mat_exp.hpp"
#include "tsd/rng.hpp"
#include "tsd/spectral.hpp"

using tsd::ComplexMatrix;
using tsd::cplx;

TEST_CASE("spectral norm on pinned cases") {
    CHECK(tsd::spectral_norm(ComplexMatrix::identity(3)) ==
          doctest::Approx(1.0).epsilon(1e-13));

    ComplexMatrix diag(2);
    diag(0, 0) = 1.0;
    diag(1, 1) = 2.0;
    CHECK(tsd::spectral_norm(diag) == doctest::Approx(2.0).epsilon(1e-13));

    // eigenvalues of M'M are {0, 9}
    ComplexMatrix nil(2);
    nil(0, 1) = 3.0;
    CHECK(tsd::spectral_norm(nil) == doctest::Approx(3.0).epsilon(1e-13));

    ComplexMatrix zero(4);
    CHECK(tsd::spectral_norm(zero) == 0.0);

    ComplexMatrix bad(2);
    bad(0, 0) = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(tsd::spectral_norm(bad), std::invalid_argument);
}

TEST_CASE("spectral norm 2x2 shortcut agrees with the general path") {
    std::mt19937 gen(5);
    for (int trial = 0; trial < 500; ++trial) {
        const ComplexMatrix m = oracle::random_matrix(2, gen);
        // embed into 3x3 so the tridiagonal path is exercised on the same data
        ComplexMatrix padded(3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) padded(i, j) = m(i, j);
        CHECK(tsd::spectral_norm(m) ==
              doctest::Approx(tsd::spectral_norm(padded)).epsilon(1e-12));
    }
}

TEST_CASE("spectral norm is submultiplicative and satisfies the triangle "
          "inequality") {
    std::mt19937 gen(123);
    std::uniform_int_distribution<int> dim_dist(2, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = dim_dist(gen);
        const ComplexMatrix a = oracle::random_matrix(dim, gen);
        const ComplexMatrix b = oracle::random_matrix(dim, gen);
        const double na = tsd::spectral_norm(a);
        const double nb = tsd::spectral_norm(b);
        const double slack = 1e-12 * (1.0 + na * nb);
        CHECK(tsd::spectral_norm(a * b) <= na * nb + slack);
        CHECK(tsd::spectral_norm(a + b) <= na + nb + slack);
    }
}

TEST_CASE("spectral norm against a large Hermitian with known spectrum") {
    // unitary conjugation of a known diagonal, built from a product of
    // exponentials of skew-Hermitian matrices
    std::mt19937 gen(42);
    const int dim = 24;
    ComplexMatrix skew(dim);
    const ComplexMatrix g = oracle::random_matrix(dim, gen);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            skew(i, j) = 0.5 * (g(i, j) - std::conj(g(j, i)));
    const ComplexMatrix u = oracle::taylor_exp(skew);
    ComplexMatrix diag(dim);
    for (int i = 0; i < dim; ++i) diag(i, i) = -3.0 + 0.37 * i;
    const ComplexMatrix h = u * diag * u.adjoint();
    CHECK(tsd::spectral_norm(h) ==
          doctest::Approx(std::max(std::abs(-3.0), std::abs(-3.0 + 0.37 * 23)))
              .epsilon(1e-11));

    const auto eig = tsd::hermitian_eigenvalues(h);
    REQUIRE(eig.size() == std::size_t(dim));
    for (int i = 0; i < dim; ++i)
        CHECK(eig[i] == doctest::Approx(-3.0 + 0.37 * i).epsilon(1e-10));
}

TEST_CASE("relative distance on pinned cases") {
    const ComplexMatrix id = ComplexMatrix::identity(3);
    CHECK(tsd::relative_distance(id, id) == 0.0);

    ComplexMatrix two = id;
    two.scale_real(2.0);
    CHECK(tsd::relative_distance(id, two) == doctest::Approx(1.0).epsilon(1e-13));

    ComplexMatrix u(2), v(2);
    u(0, 0) = 2.0;
    u(1, 1) = 1.0;
    v(0, 0) = 2.0;
    CHECK(tsd::relative_distance(u, v) == doctest::Approx(0.5).epsilon(1e-13));

    const ComplexMatrix zero(2);
    CHECK_THROWS_AS(tsd::relative_distance(zero, u), std::domain_error);
}

TEST_CASE("mat_exp on pinned cases") {
    CHECK(tsd::mat_exp(ComplexMatrix(3)) == ComplexMatrix::identity(3));

    ComplexMatrix diag(2);
    diag(0, 0) = cplx(0.3, -1.1);
    diag(1, 1) = cplx(-2.0, 0.4);
    const ComplexMatrix e = tsd::mat_exp(diag);
    CHECK(std::abs(e(0, 0) - std::exp(cplx(0.3, -1.1))) < 1e-13);
    CHECK(std::abs(e(1, 1) - std::exp(cplx(-2.0, 0.4))) < 1e-13);
    CHECK(std::abs(e(0, 1)) == 0.0);

    const double theta = 0.3;
    ComplexMatrix rot(2);
    rot(0, 1) = theta;
    rot(1, 0) = -theta;
    const ComplexMatrix r = tsd::mat_exp(rot);
    CHECK(std::abs(r(0, 0) - std::cos(theta)) < 1e-13);
    CHECK(std::abs(r(0, 1) - std::sin(theta)) < 1e-13);
    CHECK(std::abs(r(1, 0) + std::sin(theta)) < 1e-13);
    CHECK(std::abs(r(1, 1) - std::cos(theta)) < 1e-13);
}

TEST_CASE("mat_exp matches the Taylor oracle") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int dim = 2 + trial % 5;
        ComplexMatrix m = oracle::random_matrix(dim, gen);
        m.scale_real((trial % 2 ? 2.0 : 0.3) / tsd::spectral_norm(m));
        const ComplexMatrix expect = oracle::taylor_exp(m);
        CHECK(tsd::relative_distance(expect, tsd::mat_exp(m)) < 1e-12);
    }
    // large argument: norm 40
    ComplexMatrix big = oracle::random_matrix(4, gen);
    big.scale_real(40.0 / tsd::spectral_norm(big));
    CHECK(tsd::relative_distance(oracle::taylor_exp(big), tsd::mat_exp(big)) <
          1e-12);
}

TEST_CASE("mat_exp group property and unitarity") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int dim = 2 + trial % 4;
        ComplexMatrix m = oracle::random_matrix(dim, gen);
        m.scale_real(2.0 / tsd::spectral_norm(m));
        const double s = unit(gen), t = unit(gen);
        const ComplexMatrix whole = tsd::mat_exp(m * cplx(s + t));
        const ComplexMatrix split = tsd::mat_exp(m * cplx(s)) * tsd::mat_exp(m * cplx(t));
        CHECK(tsd::relative_distance(whole, split) < 1e-10);
    }
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + trial % 4;
        const ComplexMatrix g = oracle::random_matrix(dim, gen);
        ComplexMatrix skew(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                skew(i, j) = 0.5 * (g(i, j) - std::conj(g(j, i)));
        const ComplexMatrix u = tsd::mat_exp(skew);
        ComplexMatrix defect = u.adjoint() * u;
        defect -= ComplexMatrix::identity(dim);
        CHECK(tsd::spectral_norm(defect) < 1e-10);
    }
}

TEST_CASE("mat_exp overflow guard") {
    ComplexMatrix big(2);
    big(0, 0) = 701.0;
    big(1, 1) = 701.0;
    CHECK_THROWS_AS(tsd::mat_exp(big), std::range_error);
}

TEST_CASE("polar factor projects to a unitary") {
    std::mt19937 gen(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + trial % 4;
        ComplexMatrix m = oracle::random_matrix(dim, gen);
        m.scale_real(1.0 / tsd::spectral_norm(m));
        ComplexMatrix shifted = m + ComplexMatrix::identity(dim) * cplx(2.0);
        const ComplexMatrix u = tsd::polar_factor(shifted);
        ComplexMatrix defect = u.adjoint() * u;
        defect -= ComplexMatrix::identity(dim);
        CHECK(defect.frobenius_norm() < 1e-12 * dim);
    }
}

TEST_CASE("rng streams are deterministic and order independent") {
    const tsd::RngStream stream(0x1234abcd, tsd::RngStream::kNoiseDomain);
    const tsd::GaussianPair a = stream.gaussian_pair(1, 2, 3, 4);
    const tsd::GaussianPair b = stream.gaussian_pair(1, 2, 3, 4);
    CHECK(a.g0 == b.g0);
    CHECK(a.g1 == b.g1);
    const tsd::GaussianPair c = stream.gaussian_pair(2, 2, 3, 4);
    CHECK(a.g0 != c.g0);

    const tsd::RngStream other(0x1234abcd, tsd::RngStream::kGeneratorDomain);
    CHECK(other.gaussian_pair(1, 2, 3, 4).g0 != a.g0);

    // same samples regardless of which thread computes them
    double from_thread0 = 0.0, from_thread1 = 0.0;
    std::thread t0([&] { from_thread0 = stream.gaussian_pair(9, 8, 7, 6).g0; });
    std::thread t1([&] { from_thread1 = stream.gaussian_pair(9, 8, 7, 6).g0; });
    t0.join();
    t1.join();
    CHECK(from_thread0 == from_thread1);
}

TEST_CASE("rng gaussians have roughly unit variance") {
    const tsd::RngStream stream(77, tsd::RngStream::kNoiseDomain);
    const int n = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const tsd::GaussianPair p = stream.gaussian_pair(i, 0, 0, 0);
        sum += p.g0 + p.g1;
        sum_sq += p.g0 * p.g0 + p.g1 * p.g1;
    }
    const double mean = sum / (2 * n);
    const double var = sum_sq / (2 * n) - mean * mean;
    CHECK(std::abs(mean) < 3.0 / std::sqrt(2.0 * n));
    CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("sample_generator_set honors class, norm, and determinism") {
    const tsd::GeneratorSet one =
        tsd::sample_generator_set(1, 1, tsd::GeneratorClass::general, 1.0, 5);
    CHECK(std::abs(one.generators[0](0, 0)) == doctest::Approx(1.0).epsilon(1e-12));

    const tsd::GeneratorSet herm =
        tsd::sample_generator_set(4, 2, tsd::GeneratorClass::hermitian, 0.5, 6);
    for (const ComplexMatrix& a : herm.generators) {
        CHECK(tsd::spectral_norm(a) == doctest::Approx(0.5).epsilon(1e-12));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(std::abs(a(i, j) - std::conj(a(j, i))) < 1e-12);
    }

    const tsd::GeneratorSet skew =
        tsd::sample_generator_set(3, 1, tsd::GeneratorClass::skew_hermitian, 2.0, 7);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(skew.generators[0](i, j) +
                           std::conj(skew.generators[0](j, i))) < 1e-12);

    const tsd::GeneratorSet again =
        tsd::sample_generator_set(4, 2, tsd::GeneratorClass::hermitian, 0.5, 6);
    CHECK(herm.generators[0] == again.generators[0]);
    CHECK(herm.generators[1] == again.generators[1]);

    CHECK_THROWS_AS(
        tsd::sample_generator_set(0, 1, tsd::GeneratorClass::general, 1.0, 1),
        std::invalid_argument);
    CHECK_THROWS_AS(
        tsd::sample_generator_set(2, 1, tsd::GeneratorClass::general, -1.0, 1),
        std::invalid_argument);
}

TEST_CASE("make_generator_set validates the declared class") {
    ComplexMatrix not_hermitian(2);
    not_hermitian(0, 1) = cplx(1.0, 0.0);
    CHECK_THROWS_AS(tsd::make_generator_set(tsd::GeneratorClass::hermitian,
                                            {not_hermitian}),
                    std::invalid_argument);
}
