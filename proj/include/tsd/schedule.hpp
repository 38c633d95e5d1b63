#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "tsd/complex_matrix.hpp"
#include "tsd/generators.hpp"

namespace tsd {

// One factor e^{A_j * coefficient} of a product formula. Generator indices
// are zero-based internally and one-based in serialized form.
struct Term {
    int generator;
    double coefficient;
    bool operator==(const Term&) const = default;
};

struct OrderSpec {
    enum class Kind { trotter, suzuki, excursion };
    Kind kind = Kind::trotter;
    int k = 1;      // suzuki half-order (order 2k)
    int r = 1;      // segment count for trotter/suzuki
    int steps = 0;  // factor count for excursion schedules

    static OrderSpec trotter(int r) { return {Kind::trotter, 1, r, 0}; }
    static OrderSpec suzuki(int k, int r) { return {Kind::suzuki, k, r, 0}; }
    // steps/2 forward factors at +lambda, then steps/2 backward at -lambda;
    // the net flow is the identity while intermediate products grow.
    static OrderSpec excursion(int steps) {
        return {Kind::excursion, 1, 1, steps};
    }
    bool operator==(const OrderSpec&) const = default;
};

struct Schedule {
    int m = 1;
    OrderSpec spec;
    double lambda = 0.0;
    bool merged = false;
    std::size_t raw_count = 0;  // term count before any merging
    std::vector<Term> terms;

    std::size_t size() const { return terms.size(); }
};

struct CostCount {
    std::int64_t raw_exponentials;
    std::int64_t merged_exponentials;
};

// p_k = 1 / (4 - 4^{1/(2k-1)}), the coefficient taking order 2k-2 to 2k.
double suzuki_coefficient(int k);

Schedule build_schedule(int m, OrderSpec spec, double lambda, bool merge);

// Product over the term list; the first term acts first (rightmost factor).
ComplexMatrix evaluate_schedule(const GeneratorSet& gens, const Schedule& schedule);

// Flow generated by the summed generators over the schedule's total time.
ComplexMatrix exact_flow(const GeneratorSet& gens, const Schedule& schedule);

// Relative spectral distance between the exact flow and the schedule product.
double ideal_error(const GeneratorSet& gens, const Schedule& schedule);

CostCount exponential_count(const Schedule& schedule);

std::vector<Term> merge_adjacent(const std::vector<Term>& terms);

nlohmann::ordered_json schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const nlohmann::json& j);

}  // namespace tsd
