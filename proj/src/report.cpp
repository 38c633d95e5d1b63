#include "tsd/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace tsd {
namespace {

const char* kDefaultEpsilonT = "1e-2";  // used for bound evaluation when unset

std::string verdict(bool applicable, bool ok) {
    if (!applicable) return "not-applicable";
    return ok ? "satisfied" : "violated";
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string trials_csv(const CampaignResult& result) {
    std::string out = "trial,epsilon,epsilon_net\n";
    for (std::size_t t = 0; t < result.epsilon.size(); ++t) {
        out += std::to_string(t);
        out += ',';
        out += format_double(result.epsilon[t]);
        out += ',';
        out += format_double(result.epsilon_net[t]);
        out += '\n';
    }
    return out;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = double(samples.size());
    double dist = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        dist = std::max(dist, f - double(i) / n);
        dist = std::max(dist, double(i + 1) / n - f);
    }
    return dist;
}

nlohmann::ordered_json bound_verdicts(const BoundReport& report,
                                      const ErrorStats& stats, NoiseMode mode,
                                      double epsilon_m, bool epsilon_t_given,
                                      int dim) {
    // With zero noise every premise holds trivially.
    const bool noiseless = epsilon_m == 0.0;
    const bool unitary = mode == NoiseMode::gaussian_unitary || noiseless;
    const bool norm_controlled =
        unitary || mode == NoiseMode::norm_stabilized;

    nlohmann::ordered_json v;
    v["thm2_lower"] = "not-applicable";  // worst-case bound, trend-tested only
    v["thm3_upper"] =
        verdict(norm_controlled, stats.std <= report.thm3_upper);
    v["cor5_upper"] = verdict(unitary, stats.std <= report.cor5_upper);
    v["cor4_budget"] = verdict(
        epsilon_t_given && norm_controlled && epsilon_m <= report.cor4_epsilon_m,
        stats.std <= report.epsilon_t);
    const bool scalar = dim == 1;
    v["scalar_mean_lower"] = verdict(
        scalar && !noiseless,
        stats.mean >= report.scalar_mean_lower - 3.0 * stats.mean_stderr);
    v["scalar_std_lower"] = verdict(
        scalar && !noiseless,
        stats.std >= report.scalar_std_lower - 3.0 * stats.std_stderr);
    return v;
}

nlohmann::ordered_json campaign_summary(const Schedule& schedule,
                                        const NoiseSpec& noise,
                                        const CampaignResult& result, int dim,
                                        std::optional<double> epsilon_t) {
    const double et = epsilon_t.value_or(std::stod(kDefaultEpsilonT));
    BoundReport bounds;
    if (noise.epsilon_m > 0.0) {
        bounds = theorem_bounds(int(result.factor_count), dim, noise.epsilon_m, et);
    } else {
        // every closed form is zero at zero machine epsilon
        bounds.n_factors = int(result.factor_count);
        bounds.dim = dim;
        bounds.epsilon_t = et;
        bounds.cor4_epsilon_m =
            required_machine_epsilon(et, int(result.factor_count), dim);
    }
    nlohmann::ordered_json j;
    j["trials"] = result.stats.trials;
    j["mean"] = result.stats.mean;
    j["std"] = result.stats.std;
    j["mean_stderr"] = result.stats.mean_stderr;
    j["std_stderr"] = result.stats.std_stderr;
    nlohmann::ordered_json q;
    q["0.5"] = result.stats.quantiles.at(0.5);
    q["0.9"] = result.stats.quantiles.at(0.9);
    q["0.99"] = result.stats.quantiles.at(0.99);
    j["quantiles"] = q;
    j["ideal_error"] = result.ideal_error;
    j["N"] = result.factor_count;
    j["dim"] = dim;
    j["noise"] = noise_spec_to_json(noise);
    j["schedule"] = schedule_to_json(schedule);
    j["schedule"].erase("terms");  // term lists belong to the schedule command
    j["bounds"] = bound_report_to_json(bounds);
    j["verdicts"] = bound_verdicts(bounds, result.stats, noise.mode,
                                   noise.epsilon_m, epsilon_t.has_value(), dim);
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string json_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace tsd
