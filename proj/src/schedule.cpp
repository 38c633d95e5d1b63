#include "tsd/schedule.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "tsd/mat_exp.hpp"
#include "tsd/spectral.hpp"

namespace tsd {
namespace {

void append_suzuki(std::vector<Term>& out, int m, int k, double x) {
    if (k == 1) {
        // forward sweep at x/2 followed by the reversed sweep at x/2
        for (int j = 0; j < m; ++j) out.push_back({j, x / 2.0});
        for (int j = m - 1; j >= 0; --j) out.push_back({j, x / 2.0});
        return;
    }
    const double pk = suzuki_coefficient(k);
    append_suzuki(out, m, k - 1, pk * x);
    append_suzuki(out, m, k - 1, pk * x);
    append_suzuki(out, m, k - 1, (1.0 - 4.0 * pk) * x);
    append_suzuki(out, m, k - 1, pk * x);
    append_suzuki(out, m, k - 1, pk * x);
}

void validate_spec(int m, const OrderSpec& spec) {
    switch (spec.kind) {
        case OrderSpec::Kind::trotter:
            if (spec.r < 1) throw std::invalid_argument("trotter needs r >= 1");
            break;
        case OrderSpec::Kind::suzuki:
            if (spec.k < 1) throw std::invalid_argument("suzuki needs k >= 1");
            if (spec.r < 1) throw std::invalid_argument("suzuki needs r >= 1");
            break;
        case OrderSpec::Kind::excursion:
            if (m != 1)
                throw std::invalid_argument("excursion schedules use one generator");
            if (spec.steps < 2 || spec.steps % 2 != 0)
                throw std::invalid_argument("excursion needs an even step count >= 2");
            break;
    }
}

}  // namespace

double suzuki_coefficient(int k) {
    if (k < 2) throw std::invalid_argument("suzuki_coefficient needs k >= 2");
    return 1.0 / (4.0 - std::pow(4.0, 1.0 / double(2 * k - 1)));
}

std::vector<Term> merge_adjacent(const std::vector<Term>& terms) {
    std::vector<Term> out;
    for (const Term& t : terms) {
        if (!out.empty() && out.back().generator == t.generator)
            out.back().coefficient += t.coefficient;
        else
            out.push_back(t);
    }
    return out;
}

Schedule build_schedule(int m, OrderSpec spec, double lambda, bool merge) {
    if (m < 1) throw std::invalid_argument("generator count must be >= 1");
    if (!std::isfinite(lambda))
        throw std::invalid_argument("lambda must be finite");
    validate_spec(m, spec);

    std::vector<Term> terms;
    switch (spec.kind) {
        case OrderSpec::Kind::trotter:
            terms.reserve(std::size_t(m) * spec.r);
            for (int rep = 0; rep < spec.r; ++rep)
                for (int j = 0; j < m; ++j) terms.push_back({j, lambda / spec.r});
            break;
        case OrderSpec::Kind::suzuki:
            for (int rep = 0; rep < spec.r; ++rep)
                append_suzuki(terms, m, spec.k, lambda / spec.r);
            break;
        case OrderSpec::Kind::excursion:
            terms.reserve(std::size_t(spec.steps));
            for (int i = 0; i < spec.steps / 2; ++i) terms.push_back({0, lambda});
            for (int i = 0; i < spec.steps / 2; ++i) terms.push_back({0, -lambda});
            break;
    }

    Schedule schedule{m, spec, lambda, merge, terms.size(), std::move(terms)};
    if (merge) schedule.terms = merge_adjacent(schedule.terms);
    return schedule;
}

ComplexMatrix evaluate_schedule(const GeneratorSet& gens, const Schedule& schedule) {
    if (gens.count() != schedule.m)
        throw std::invalid_argument("generator count does not match schedule");
    std::map<std::pair<int, double>, ComplexMatrix> cache;
    ComplexMatrix product = ComplexMatrix::identity(gens.dim);
    for (const Term& t : schedule.terms) {
        if (t.generator < 0 || t.generator >= schedule.m)
            throw std::invalid_argument("schedule references an unknown generator");
        const auto key = std::make_pair(t.generator, t.coefficient);
        auto it = cache.find(key);
        if (it == cache.end()) {
            ComplexMatrix scaled = gens.generators[t.generator];
            scaled.scale_real(t.coefficient);
            it = cache.emplace(key, mat_exp(scaled)).first;
        }
        product = it->second * product;
    }
    return product;
}

ComplexMatrix exact_flow(const GeneratorSet& gens, const Schedule& schedule) {
    ComplexMatrix total = gens.sum();
    if (schedule.spec.kind == OrderSpec::Kind::excursion) {
        // per-generator coefficients cancel; the exact flow is the identity
        double net = 0.0;
        for (const Term& t : schedule.terms) net += t.coefficient;
        total.scale_real(net);
    } else {
        total.scale_real(schedule.lambda);
    }
    return mat_exp(total);
}

double ideal_error(const GeneratorSet& gens, const Schedule& schedule) {
    const ComplexMatrix exact = exact_flow(gens, schedule);
    return relative_distance(exact, evaluate_schedule(gens, schedule));
}

CostCount exponential_count(const Schedule& schedule) {
    const std::int64_t raw = std::int64_t(schedule.raw_count != 0
                                              ? schedule.raw_count
                                              : schedule.terms.size());
    const std::int64_t merged =
        std::int64_t(schedule.merged ? schedule.terms.size()
                                     : merge_adjacent(schedule.terms).size());
    return {raw, merged};
}

nlohmann::ordered_json schedule_to_json(const Schedule& schedule) {
    nlohmann::ordered_json spec;
    switch (schedule.spec.kind) {
        case OrderSpec::Kind::trotter:
            spec = {{"type", "trotter"}, {"r", schedule.spec.r}};
            break;
        case OrderSpec::Kind::suzuki:
            spec = {{"type", "suzuki"}, {"k", schedule.spec.k}, {"r", schedule.spec.r}};
            break;
        case OrderSpec::Kind::excursion:
            spec = {{"type", "excursion"}, {"steps", schedule.spec.steps}};
            break;
    }
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const Term& t : schedule.terms)
        terms.push_back({t.generator + 1, t.coefficient});
    return {{"m", schedule.m},
            {"order_spec", spec},
            {"lambda", schedule.lambda},
            {"merged", schedule.merged},
            {"terms", terms}};
}

Schedule schedule_from_json(const nlohmann::json& j) {
    const int m = j.at("m").get<int>();
    const auto& spec_json = j.at("order_spec");
    const std::string type = spec_json.at("type").get<std::string>();
    OrderSpec spec;
    if (type == "trotter") {
        spec = OrderSpec::trotter(spec_json.at("r").get<int>());
    } else if (type == "suzuki") {
        spec = OrderSpec::suzuki(spec_json.at("k").get<int>(),
                                 spec_json.at("r").get<int>());
    } else if (type == "excursion") {
        spec = OrderSpec::excursion(spec_json.at("steps").get<int>());
    } else {
        throw std::invalid_argument("unknown order_spec type: " + type);
    }
    Schedule schedule = build_schedule(m, spec, j.at("lambda").get<double>(),
                                       j.at("merged").get<bool>());
    // serialized terms are authoritative when present
    if (j.contains("terms")) {
        std::vector<Term> terms;
        for (const auto& t : j.at("terms"))
            terms.push_back({t.at(0).get<int>() - 1, t.at(1).get<double>()});
        if (terms != schedule.terms)
            throw std::invalid_argument("schedule terms disagree with order_spec");
    }
    return schedule;
}

}  // namespace tsd
