#include "tsd/repro.hpp"

#include <cmath>
#include <span>

#include "tsd/bounds.hpp"
#include "tsd/config.hpp"
#include "tsd/distributions.hpp"
#include "tsd/mat_exp.hpp"
#include "tsd/models.hpp"
#include "tsd/report.hpp"
#include "tsd/spectral.hpp"

namespace tsd::repro {
namespace {

constexpr std::uint32_t kScalarTrials = 100000;
constexpr std::uint32_t kMatrixTrials = 10000;
constexpr double kEpsilonM = 1e-3;

std::uint32_t pick(std::uint32_t requested, std::uint32_t fallback) {
    return requested == 0 ? fallback : requested;
}

nlohmann::ordered_json sweep_json(const std::vector<SweepPoint>& points,
                                  const GrowthFit& fit) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SweepPoint& p : points)
        rows.push_back({{"N", p.n_factors},
                        {"mean", p.stats.mean},
                        {"std", p.stats.std},
                        {"std_stderr", p.stats.std_stderr}});
    return {{"points", rows},
            {"fit",
             {{"model", fit.model == GrowthModel::linear ? "linear" : "exponential"},
              {"rate", fit.rate},
              {"r_squared", fit.r_squared}}}};
}

}  // namespace

ScalarCampaign run_scalar(std::uint64_t seed, std::uint32_t trials, int threads) {
    ScalarCampaign campaign;
    campaign.n_factors = 100;
    const GeneratorSet gens =
        sample_generator_set(1, 1, GeneratorClass::hermitian, 1.0, seed + 11);
    campaign.schedule =
        build_schedule(1, OrderSpec::trotter(campaign.n_factors), 0.1, false);
    campaign.noise = NoiseSpec{0.05, NoiseMode::lognormal, seed + 101};

    CampaignOptions options;
    options.trials = pick(trials, kScalarTrials);
    options.threads = threads;
    options.collect_scalar_ratio = true;
    campaign.result = run_campaign(gens, campaign.schedule, campaign.noise, options);

    const std::vector<double>& x = campaign.result.scalar_ratio;
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= double(x.size());
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    campaign.mean_x = mean;
    campaign.std_x = std::sqrt(ss / double(x.size() - 1));
    const int n = campaign.n_factors;
    const double em = campaign.noise.epsilon_m;
    campaign.ks_folded = ks_statistic(
        campaign.result.epsilon,
        [n, em](double e) { return folded_lognormal_cdf(e, n, em); });
    return campaign;
}

std::vector<Lemma1Point> run_lemma1(std::uint64_t seed, std::uint32_t trials,
                                    int threads) {
    std::vector<Lemma1Point> points;
    for (int dim : {1, 4, 16, 64}) {
        const GeneratorSet gens = sample_generator_set(
            dim, 1, GeneratorClass::skew_hermitian, 1.0, seed + 21 + dim);
        const Schedule schedule =
            build_schedule(1, OrderSpec::trotter(1), 1.0, false);
        const NoiseSpec noise{kEpsilonM, NoiseMode::gaussian, seed + 201 + dim};

        CampaignOptions options;
        options.trials = pick(trials, kMatrixTrials);
        options.threads = threads;
        options.collect_per_factor = true;

        Lemma1Point point;
        point.dim = dim;
        point.epsilon_m = kEpsilonM;
        point.result = run_campaign(gens, schedule, noise, options);
        point.rms = root_mean_square(point.result.per_factor_errors);
        const double support = 1.1 * 2.0 * kEpsilonM * std::sqrt(double(dim));
        std::size_t below = 0;
        for (double v : point.result.per_factor_errors)
            if (v <= support) ++below;
        point.support_fraction =
            double(below) / double(point.result.per_factor_errors.size());
        points.push_back(std::move(point));
    }
    return points;
}

InstabilitySweep run_instability(std::uint64_t seed, std::uint32_t trials,
                                 int threads) {
    InstabilitySweep sweep;
    const GeneratorSet gens = excursion_generator_set(4, seed + 31);
    const double step = std::log(1.2);
    sweep.factor_norm = spectral_norm(mat_exp(gens.generators.front() * cplx(step)));
    const NoiseSpec noise{kEpsilonM, NoiseMode::gaussian, seed + 301};

    std::vector<std::pair<double, double>> fit_points;
    for (int n : {8, 16, 24, 32}) {
        const Schedule schedule =
            build_schedule(1, OrderSpec::excursion(n), step, false);
        CampaignOptions options;
        options.trials = pick(trials, kMatrixTrials);
        options.threads = threads;
        const CampaignResult result = run_campaign(gens, schedule, noise, options);
        fit_points.emplace_back(double(n), result.stats.std);
        sweep.points.push_back({n, result.stats});
    }
    sweep.fit = fit_growth(fit_points);
    return sweep;
}

std::vector<StabilizedSweep> run_stabilized(std::uint64_t seed,
                                            std::uint32_t trials, int threads) {
    std::vector<StabilizedSweep> sweeps;
    for (int dim : {2, 4}) {
        const GeneratorSet gens = sample_generator_set(
            dim, 2, GeneratorClass::skew_hermitian, 1.0, seed + 41 + dim);
        for (NoiseMode mode :
             {NoiseMode::gaussian_unitary, NoiseMode::norm_stabilized}) {
            StabilizedSweep sweep;
            sweep.dim = dim;
            sweep.mode = mode;
            sweep.epsilon_m = kEpsilonM;
            const NoiseSpec noise{kEpsilonM, mode, seed + 401};
            std::vector<std::pair<double, double>> fit_points;
            for (int n : {10, 25, 50, 100}) {
                const int r = n / 2;
                const Schedule schedule = build_schedule(
                    2, OrderSpec::trotter(r), 0.2 * double(r), false);
                CampaignOptions options;
                options.trials = pick(trials, kMatrixTrials);
                options.threads = threads;
                const CampaignResult result =
                    run_campaign(gens, schedule, noise, options);
                fit_points.emplace_back(double(n), result.stats.std);
                sweep.points.push_back({n, result.stats});
            }
            sweep.fit = fit_growth(fit_points);
            sweeps.push_back(std::move(sweep));
        }
    }
    return sweeps;
}

BudgetCampaign run_budget(std::uint64_t seed, std::uint32_t trials, int threads) {
    BudgetCampaign campaign;
    campaign.epsilon_t = 1e-2;
    const int n = 100;
    const int dim = 4;
    campaign.epsilon_m = required_machine_epsilon(campaign.epsilon_t, n, dim);
    const GeneratorSet gens = sample_generator_set(
        dim, 2, GeneratorClass::skew_hermitian, 1.0, seed + 51);
    const Schedule schedule =
        build_schedule(2, OrderSpec::trotter(n / 2), 0.2 * double(n / 2), false);
    const NoiseSpec noise{campaign.epsilon_m, NoiseMode::gaussian_unitary,
                          seed + 501};
    CampaignOptions options;
    options.trials = pick(trials, kMatrixTrials);
    options.threads = threads;
    campaign.stats = run_campaign(gens, schedule, noise, options).stats;
    return campaign;
}

void write_all(const std::filesystem::path& out, std::uint64_t seed,
               std::uint32_t trials, int threads) {
    namespace fs = std::filesystem;
    fs::create_directories(out / "scalar");
    fs::create_directories(out / "lemma1");
    fs::create_directories(out / "instability");
    fs::create_directories(out / "stabilized");
    fs::create_directories(out / "budget");

    {
        const ScalarCampaign c = run_scalar(seed, trials, threads);
        write_file(out / "scalar" / "trials.csv", trials_csv(c.result));
        nlohmann::ordered_json summary =
            campaign_summary(c.schedule, c.noise, c.result, 1, std::nullopt);
        summary["mean_x"] = c.mean_x;
        summary["std_x"] = c.std_x;
        summary["ks_folded"] = c.ks_folded;
        write_file(out / "scalar" / "summary.json", json_text(summary));
    }
    {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const Lemma1Point& p : run_lemma1(seed, trials, threads)) {
            write_file(out / "lemma1" / ("dim" + std::to_string(p.dim) + "_trials.csv"),
                       trials_csv(p.result));
            rows.push_back({{"dim", p.dim},
                            {"epsilon_m", p.epsilon_m},
                            {"per_factor_rms", p.rms},
                            {"support_fraction", p.support_fraction}});
        }
        write_file(out / "lemma1" / "summary.json",
                   json_text({{"points", rows}}));
    }
    {
        const InstabilitySweep sweep = run_instability(seed, trials, threads);
        nlohmann::ordered_json summary = sweep_json(sweep.points, sweep.fit);
        summary["factor_norm"] = sweep.factor_norm;
        write_file(out / "instability" / "summary.json", json_text(summary));
    }
    {
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (const StabilizedSweep& sweep : run_stabilized(seed, trials, threads)) {
            nlohmann::ordered_json entry = sweep_json(sweep.points, sweep.fit);
            entry["dim"] = sweep.dim;
            entry["mode"] = to_string(sweep.mode);
            const BoundReport bounds = theorem_bounds(
                sweep.points.back().n_factors, sweep.dim, sweep.epsilon_m, 1e-2);
            entry["cor5_upper_at_max_N"] = bounds.cor5_upper;
            entry["thm3_upper_at_max_N"] = bounds.thm3_upper;
            all.push_back(std::move(entry));
        }
        write_file(out / "stabilized" / "summary.json",
                   json_text({{"sweeps", all}}));
    }
    {
        const BudgetCampaign c = run_budget(seed, trials, threads);
        write_file(out / "budget" / "summary.json",
                   json_text({{"epsilon_t", c.epsilon_t},
                              {"epsilon_m", c.epsilon_m},
                              {"std", c.stats.std},
                              {"std_stderr", c.stats.std_stderr},
                              {"mean", c.stats.mean}}));
    }
}

}  // namespace tsd::repro
