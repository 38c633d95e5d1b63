#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tsd/mat_exp.hpp"
#include "tsd/schedule.hpp"
#include "tsd/spectral.hpp"

using tsd::ComplexMatrix;
using tsd::cplx;
using tsd::OrderSpec;
using tsd::Schedule;
using tsd::Term;

namespace {

// Direct expansion of the five-block recursion, used as the reference for the
// library's flattening.
std::vector<Term> reference_suzuki(int m, int k, double x) {
    if (k == 1) {
        std::vector<Term> base;
        for (int j = 0; j < m; ++j) base.push_back({j, x / 2});
        for (int j = m - 1; j >= 0; --j) base.push_back({j, x / 2});
        return base;
    }
    const double pk = tsd::suzuki_coefficient(k);
    std::vector<Term> out;
    for (double part : {pk * x, pk * x, (1 - 4 * pk) * x, pk * x, pk * x}) {
        const auto sub = reference_suzuki(m, k - 1, part);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

tsd::GeneratorSet hermitian_pair(int dim, std::uint64_t seed, double norm) {
    return tsd::sample_generator_set(dim, 2, tsd::GeneratorClass::hermitian, norm,
                                     seed);
}

}  // namespace

TEST_CASE("suzuki coefficients") {
    CHECK(tsd::suzuki_coefficient(2) ==
          doctest::Approx(0.4144907717943757).epsilon(1e-14));
    // direct evaluation of 1/(4 - 4^(1/5))
    CHECK(tsd::suzuki_coefficient(3) ==
          doctest::Approx(0.3730658277332728).epsilon(1e-14));
    CHECK_THROWS_AS(tsd::suzuki_coefficient(1), std::invalid_argument);
    for (int k = 2; k <= 10; ++k) {
        const double pk = tsd::suzuki_coefficient(k);
        CHECK(pk > 0.25);
        CHECK(pk <= 1.0);
        CHECK(4.0 * pk + (1.0 - 4.0 * pk) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("suzuki base case has the forward-then-reversed sweep") {
    const Schedule s = tsd::build_schedule(2, OrderSpec::suzuki(1, 1), 0.8, false);
    const std::vector<Term> expect = {
        {0, 0.4}, {1, 0.4}, {1, 0.4}, {0, 0.4}};
    CHECK(s.terms == expect);
}

TEST_CASE("single generator merges to one exponential") {
    for (OrderSpec spec : {OrderSpec::trotter(5), OrderSpec::suzuki(2, 3)}) {
        const Schedule s = tsd::build_schedule(1, spec, 0.7, true);
        REQUIRE(s.terms.size() == 1);
        CHECK(s.terms[0].generator == 0);
        CHECK(s.terms[0].coefficient == doctest::Approx(0.7).epsilon(1e-12));
    }
}

TEST_CASE("order-4 schedule matches the reference expansion") {
    const Schedule s = tsd::build_schedule(2, OrderSpec::suzuki(2, 1), 1.0, false);
    REQUIRE(s.terms.size() == 20);
    const auto expect = reference_suzuki(2, 2, 1.0);
    REQUIRE(expect.size() == 20);
    for (std::size_t i = 0; i < 20; ++i) {
        CHECK(s.terms[i].generator == expect[i].generator);
        CHECK(s.terms[i].coefficient ==
              doctest::Approx(expect[i].coefficient).epsilon(1e-14));
    }
    // the middle block carries backward steps of size (1-4p2)/2
    const double backward = (1.0 - 4.0 * tsd::suzuki_coefficient(2)) / 2.0;
    CHECK(backward == doctest::Approx(-0.3289815435887514).epsilon(1e-12));
    int negatives = 0;
    for (const Term& t : s.terms)
        if (t.coefficient < 0.0) ++negatives;
    CHECK(negatives == 4);
}

TEST_CASE("per-generator coefficient sums equal lambda across the sweep") {
    const double lambda = 0.83;
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= 4; ++k)
            for (int r : {1, 2, 3, 8}) {
                const Schedule s =
                    tsd::build_schedule(m, OrderSpec::suzuki(k, r), lambda, false);
                std::vector<double> sums(m, 0.0);
                for (const Term& t : s.terms) {
                    sums[t.generator] += t.coefficient;
                    CHECK(std::abs(t.coefficient) <= lambda + 1e-12);
                }
                for (double s_j : sums)
                    CHECK(s_j == doctest::Approx(lambda).epsilon(1e-12));
            }
    for (int m = 1; m <= 4; ++m) {
        const Schedule s = tsd::build_schedule(m, OrderSpec::trotter(3), lambda, false);
        std::vector<double> sums(m, 0.0);
        for (const Term& t : s.terms) sums[t.generator] += t.coefficient;
        for (double s_j : sums) CHECK(s_j == doctest::Approx(lambda).epsilon(1e-12));
    }
}

TEST_CASE("unmerged suzuki schedules are palindromic") {
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 4; ++k) {
            const Schedule s =
                tsd::build_schedule(m, OrderSpec::suzuki(k, 1), 0.31, false);
            const std::size_t n = s.terms.size();
            for (std::size_t i = 0; i < n / 2; ++i) {
                CHECK(s.terms[i].generator == s.terms[n - 1 - i].generator);
                CHECK(s.terms[i].coefficient ==
                      doctest::Approx(s.terms[n - 1 - i].coefficient).epsilon(1e-15));
            }
        }
}

TEST_CASE("exponential counts") {
    const Schedule base = tsd::build_schedule(2, OrderSpec::suzuki(1, 1), 1.0, false);
    CHECK(tsd::exponential_count(base).raw_exponentials == 4);
    CHECK(tsd::exponential_count(base).merged_exponentials == 3);

    const Schedule s4 = tsd::build_schedule(2, OrderSpec::suzuki(2, 1), 1.0, false);
    CHECK(tsd::exponential_count(s4).raw_exponentials == 20);

    const Schedule trot = tsd::build_schedule(2, OrderSpec::trotter(3), 1.0, false);
    CHECK(tsd::exponential_count(trot).raw_exponentials == 6);

    for (int k = 1; k <= 4; ++k)
        for (int r : {1, 2, 5}) {
            const Schedule s =
                tsd::build_schedule(3, OrderSpec::suzuki(k, r), 1.0, false);
            std::int64_t expect = 2 * 3 * r;
            for (int i = 1; i < k; ++i) expect *= 5;
            CHECK(tsd::exponential_count(s).raw_exponentials == expect);
            CHECK(tsd::exponential_count(s).merged_exponentials <= expect);
        }
}

TEST_CASE("build_schedule rejects bad input") {
    CHECK_THROWS_AS(tsd::build_schedule(0, OrderSpec::trotter(1), 1.0, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        tsd::build_schedule(2, OrderSpec::trotter(1), std::nan(""), false),
        std::invalid_argument);
    CHECK_THROWS_AS(tsd::build_schedule(2, OrderSpec::excursion(4), 1.0, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(tsd::build_schedule(1, OrderSpec::excursion(3), 1.0, false),
                    std::invalid_argument);
}

TEST_CASE("evaluate_schedule applies the first term rightmost") {
    const tsd::GeneratorSet gens = hermitian_pair(3, 19, 1.0);
    Schedule s;
    s.m = 2;
    s.lambda = 0.9;
    s.raw_count = 2;
    s.terms = {{0, 0.4}, {1, 0.5}};
    const ComplexMatrix product = tsd::evaluate_schedule(gens, s);
    const ComplexMatrix expect = tsd::mat_exp(gens.generators[1] * cplx(0.5)) *
                                 tsd::mat_exp(gens.generators[0] * cplx(0.4));
    CHECK(tsd::relative_distance(expect, product) < 1e-14);
}

TEST_CASE("evaluate_schedule on commuting generators is exact") {
    tsd::GeneratorSet gens;
    gens.dim = 3;
    gens.cls = tsd::GeneratorClass::hermitian;
    ComplexMatrix a(3), b(3);
    a(0, 0) = 0.3;
    a(1, 1) = -0.2;
    a(2, 2) = 0.9;
    b(0, 0) = -1.1;
    b(1, 1) = 0.4;
    b(2, 2) = 0.2;
    gens.generators = {a, b};

    const Schedule s = tsd::build_schedule(2, OrderSpec::suzuki(2, 2), 0.6, false);
    const ComplexMatrix direct = tsd::mat_exp((a + b) * cplx(0.6));
    CHECK(tsd::relative_distance(direct, tsd::evaluate_schedule(gens, s)) < 1e-10);
    CHECK(tsd::ideal_error(gens, s) < 1e-10);

    // single factor reduces to one exponential
    const Schedule single = tsd::build_schedule(1, OrderSpec::trotter(1), 0.37, false);
    tsd::GeneratorSet one;
    one.dim = 3;
    one.generators = {a};
    CHECK(tsd::relative_distance(tsd::mat_exp(a * cplx(0.37)),
                                 tsd::evaluate_schedule(one, single)) < 1e-14);
}

TEST_CASE("merged and unmerged schedules evaluate identically") {
    const tsd::GeneratorSet gens = hermitian_pair(4, 23, 1.0);
    for (OrderSpec spec : {OrderSpec::suzuki(2, 2), OrderSpec::trotter(4)}) {
        const Schedule raw = tsd::build_schedule(2, spec, 0.45, false);
        const Schedule merged = tsd::build_schedule(2, spec, 0.45, true);
        CHECK(tsd::relative_distance(tsd::evaluate_schedule(gens, raw),
                                     tsd::evaluate_schedule(gens, merged)) < 1e-12);
    }
}

TEST_CASE("ideal error is zero at lambda zero") {
    const tsd::GeneratorSet gens = hermitian_pair(2, 29, 1.0);
    const Schedule s = tsd::build_schedule(2, OrderSpec::suzuki(1, 1), 0.0, false);
    CHECK(tsd::ideal_error(gens, s) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("ideal error scales with the schedule order") {
    const tsd::GeneratorSet gens = hermitian_pair(4, 31, 1.0);
    const std::vector<double> lambdas = {0.05, 0.1, 0.2, 0.4};
    for (int k : {1, 2}) {
        std::vector<double> errors;
        for (double lambda : lambdas) {
            const Schedule s =
                tsd::build_schedule(2, OrderSpec::suzuki(k, 1), lambda, false);
            errors.push_back(tsd::ideal_error(gens, s));
        }
        const double slope = oracle::loglog_slope(lambdas, errors);
        CHECK(slope == doctest::Approx(2 * k + 1).epsilon(0.3 / (2 * k + 1)));
    }
}

TEST_CASE("trotter error shrinks like 1/r") {
    const tsd::GeneratorSet gens = hermitian_pair(4, 37, 1.0);
    double prev = 0.0;
    for (int r : {1, 2, 4, 8}) {
        const Schedule s = tsd::build_schedule(2, OrderSpec::trotter(r), 0.1, false);
        const double err = tsd::ideal_error(gens, s);
        if (r > 1) {
            const double ratio = prev / err;
            CHECK(ratio >= 1.6);
            CHECK(ratio <= 2.4);
        }
        prev = err;
    }
}

TEST_CASE("excursion schedules cancel exactly in the ideal flow") {
    const Schedule s = tsd::build_schedule(1, OrderSpec::excursion(8), 0.2, false);
    REQUIRE(s.terms.size() == 8);
    double net = 0.0;
    for (const Term& t : s.terms) net += t.coefficient;
    CHECK(net == doctest::Approx(0.0).epsilon(1e-15));

    tsd::GeneratorSet gens;
    gens.dim = 2;
    ComplexMatrix a(2);
    a(0, 0) = 1.0;
    a(1, 1) = -1.0;
    gens.generators = {a};
    CHECK(tsd::ideal_error(gens, s) < 1e-13);
}

TEST_CASE("schedule JSON round-trips") {
    const Schedule s = tsd::build_schedule(3, OrderSpec::suzuki(2, 2), 0.37, false);
    const auto j = tsd::schedule_to_json(s);
    CHECK(j.at("m") == 3);
    CHECK(j.at("terms").size() == s.terms.size());
    CHECK(j.at("terms")[0][0] == 1);  // generator indices are one-based outside

    const Schedule back = tsd::schedule_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.terms == s.terms);
    CHECK(back.lambda == s.lambda);
    CHECK(back.spec == s.spec);
}
