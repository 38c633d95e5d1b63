// Command-line front end: builds product-formula schedules, sweeps ideal
// error, runs machine-noise Monte Carlo campaigns, evaluates stability
// bounds, and reproduces the bundled fixed-seed campaigns.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsd/bounds.hpp"
#include "tsd/campaign.hpp"
#include "tsd/config.hpp"
#include "tsd/hubbard.hpp"
#include "tsd/report.hpp"
#include "tsd/repro.hpp"
#include "tsd/spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct CommonFlags {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> trials;
    std::optional<std::string> out;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "override the master seed");
    cmd->add_option("--trials", flags.trials, "override the trial count");
    cmd->add_option("--out", flags.out, "output directory");
    cmd->add_option("--threads", flags.threads, "worker threads (speed only)")
        ->check(CLI::PositiveNumber);
}

void apply_overrides(tsd::CampaignConfig& config, const CommonFlags& flags) {
    if (flags.seed) config.noise.master_seed = *flags.seed;
    if (flags.trials) config.trials = *flags.trials;
}

// Tracks files written by one command so a failure never leaves partial output.
struct OutputGuard {
    std::vector<fs::path> written;
    bool committed = false;
    ~OutputGuard() {
        if (committed) return;
        for (const fs::path& p : written) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }
    void write(const fs::path& path, const std::string& contents) {
        tsd::write_file(path, contents);
        written.push_back(path);
    }
};

int run_schedule(const std::string& config_path, int m, int order, int r,
                 double lambda, bool trotter, bool merge, bool excursion,
                 int steps, const std::string& out_path) {
    tsd::Schedule schedule;
    if (!config_path.empty()) {
        const tsd::CampaignConfig config = tsd::load_campaign_config(config_path);
        schedule = tsd::build_point(config, tsd::SweepAxis::none, 0.0).schedule;
    } else {
        tsd::OrderSpec spec;
        if (trotter) {
            spec = tsd::OrderSpec::trotter(r);
        } else if (excursion) {
            spec = tsd::OrderSpec::excursion(steps);
        } else {
            if (order < 2 || order % 2 != 0)
                throw std::invalid_argument("--order must be a positive even integer");
            spec = tsd::OrderSpec::suzuki(order / 2, r);
        }
        schedule = tsd::build_schedule(m, spec, lambda, merge);
    }
    const tsd::CostCount cost = tsd::exponential_count(schedule);
    std::cout << "exponentials: raw " << cost.raw_exponentials << ", merged "
              << cost.merged_exponentials << "\n";
    const std::string text = tsd::json_text(tsd::schedule_to_json(schedule));
    if (out_path.empty())
        std::cout << text;
    else
        tsd::write_file(out_path, text);
    return 0;
}

int run_ideal_error(const std::string& config_path, const CommonFlags& flags) {
    tsd::CampaignConfig config = tsd::load_campaign_config(config_path);
    const tsd::GeneratorSet gens = tsd::build_generators(config.source);

    std::vector<double> lambdas = config.lambda_values;
    if (lambdas.empty()) lambdas = {config.lambda};
    std::vector<int> rs = config.r_values;
    if (rs.empty()) rs = {config.spec.r};
    std::vector<int> ks = config.k_values;
    if (ks.empty()) ks = {config.spec.k};

    std::string csv = "lambda,r,k,ideal_error\n";
    for (double lambda : lambdas)
        for (int r : rs)
            for (int k : ks) {
                tsd::OrderSpec spec = config.spec;
                spec.r = r;
                spec.k = k;
                const tsd::Schedule schedule =
                    tsd::build_schedule(config.source.count, spec, lambda,
                                        config.merge);
                const double err = tsd::ideal_error(gens, schedule);
                csv += tsd::format_double(lambda);
                csv += ',';
                csv += std::to_string(r);
                csv += ',';
                csv += std::to_string(k);
                csv += ',';
                csv += tsd::format_double(err);
                csv += '\n';
            }

    if (flags.out) {
        fs::create_directories(*flags.out);
        tsd::write_file(fs::path(*flags.out) / "ideal_error.csv", csv);
    } else {
        std::cout << csv;
    }
    return 0;
}

int run_noise_sim(const std::string& config_path, const CommonFlags& flags) {
    tsd::CampaignConfig config = tsd::load_campaign_config(config_path);
    apply_overrides(config, flags);
    const tsd::GeneratorSet gens = tsd::build_generators(config.source);

    const fs::path out = flags.out ? fs::path(*flags.out) : fs::path(".");
    fs::create_directories(out);
    OutputGuard guard;

    auto run_point = [&](tsd::SweepAxis axis, double value,
                         const std::string& tag) {
        const tsd::CampaignPoint point = tsd::build_point(config, axis, value);
        tsd::CampaignOptions options;
        options.trials = config.trials;
        options.threads = flags.threads;
        options.collect_per_factor = config.collect_per_factor;
        const tsd::CampaignResult result =
            tsd::run_campaign(gens, point.schedule, point.noise, options);
        guard.write(out / ("trials" + tag + ".csv"), tsd::trials_csv(result));
        ordered_json summary = tsd::campaign_summary(
            point.schedule, point.noise, result, gens.dim, config.epsilon_t);
        if (config.collect_per_factor)
            summary["per_factor_rms"] =
                tsd::root_mean_square(result.per_factor_errors);
        guard.write(out / ("summary" + tag + ".json"), tsd::json_text(summary));
        return result;
    };

    if (config.sweep_axis == tsd::SweepAxis::none) {
        run_point(tsd::SweepAxis::none, 0.0, "");
    } else {
        std::vector<std::pair<double, double>> sigma_points;
        ordered_json rows = ordered_json::array();
        for (double value : config.sweep_values) {
            std::string tag = "_" + tsd::to_string(config.sweep_axis) + "_" +
                              tsd::format_double(value);
            for (char& c : tag)
                if (c == '.' || c == '-') c = 'm';
            const tsd::CampaignResult result =
                run_point(config.sweep_axis, value, tag);
            rows.push_back({{tsd::to_string(config.sweep_axis), value},
                            {"N", result.factor_count},
                            {"mean", result.stats.mean},
                            {"std", result.stats.std}});
            sigma_points.emplace_back(double(result.factor_count),
                                      result.stats.std);
        }
        ordered_json sweep_summary = {{"axis", tsd::to_string(config.sweep_axis)},
                                      {"points", rows}};
        if (config.sweep_axis == tsd::SweepAxis::n_factors &&
            sigma_points.size() >= 4) {
            const tsd::GrowthFit fit = tsd::fit_growth(sigma_points);
            sweep_summary["fit"] = {
                {"model",
                 fit.model == tsd::GrowthModel::linear ? "linear" : "exponential"},
                {"rate", fit.rate},
                {"r_squared", fit.r_squared}};
        }
        guard.write(out / "sweep_summary.json", tsd::json_text(sweep_summary));
    }
    guard.committed = true;
    return 0;
}

int run_bounds(int n, int dim, double epsilon_m, double epsilon_t,
               const std::string& out_path) {
    const tsd::BoundReport report = tsd::theorem_bounds(n, dim, epsilon_m, epsilon_t);
    const std::string text = tsd::json_text(tsd::bound_report_to_json(report));
    if (out_path.empty())
        std::cout << text;
    else
        tsd::write_file(out_path, text);
    return 0;
}

int run_hubbard(const tsd::HubbardParams& params, const std::string& out_path) {
    params.validate();
    const tsd::ComplexMatrix term = tsd::hubbard_term_matrix(params.t_h, params.u_h);
    const double tau = tsd::hubbard_tau(params.sim_time, params.t_h, params.u_h);
    const auto bonds = tsd::enumerate_lattice_terms(params.eta, params.boundary);
    const int m = int(bonds.size());
    const double cost = tsd::hubbard_cost(params.eta, tau, m, params.epsilon_t);
    const double budget =
        tsd::hubbard_machine_epsilon(params.epsilon_t, params.eta, tau, m);

    ordered_json term_rows = ordered_json::array();
    for (int i = 0; i < 4; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < 4; ++j) row.push_back(term(i, j).real());
        term_rows.push_back(row);
    }
    const ordered_json j = {{"params", tsd::hubbard_params_to_json(params)},
                            {"term_matrix", term_rows},
                            {"tau", tau},
                            {"edge_count", m},
                            {"n_exp", cost},
                            {"epsilon_m_budget", budget}};
    const std::string text = tsd::json_text(j);
    if (out_path.empty())
        std::cout << text;
    else
        tsd::write_file(out_path, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trotter-Suzuki decomposition stability toolkit"};
    app.require_subcommand(1);

    // schedule
    auto* schedule_cmd =
        app.add_subcommand("schedule", "build a product-formula schedule");
    std::string sched_config;
    int sched_m = 2, sched_order = 2, sched_r = 1, sched_steps = 0;
    double sched_lambda = 1.0;
    bool sched_trotter = false, sched_merge = false;
    std::string sched_out;
    schedule_cmd->add_option("--config", sched_config, "campaign config JSON");
    schedule_cmd->add_option("--m", sched_m, "generator count");
    schedule_cmd->add_option("--order", sched_order, "suzuki order (even)");
    schedule_cmd->add_option("--r", sched_r, "segment count");
    schedule_cmd->add_option("--steps", sched_steps, "excursion step count");
    schedule_cmd->add_option("--lambda", sched_lambda, "total flow time");
    schedule_cmd->add_flag("--trotter", sched_trotter, "first-order schedule");
    schedule_cmd->add_flag("--merge", sched_merge, "merge adjacent equal factors");
    schedule_cmd->add_option("--out", sched_out, "output JSON path");

    // ideal-error
    auto* ideal_cmd =
        app.add_subcommand("ideal-error", "sweep the noise-free schedule error");
    std::string ideal_config;
    CommonFlags ideal_flags;
    ideal_cmd->add_option("--config", ideal_config, "campaign config JSON")
        ->required();
    add_common(ideal_cmd, ideal_flags);

    // noise-sim
    auto* sim_cmd =
        app.add_subcommand("noise-sim", "Monte Carlo machine-error campaign");
    std::string sim_config;
    CommonFlags sim_flags;
    sim_cmd->add_option("--config", sim_config, "campaign config JSON")->required();
    add_common(sim_cmd, sim_flags);

    // bounds
    auto* bounds_cmd =
        app.add_subcommand("bounds", "closed-form stability bounds");
    int bounds_n = 100, bounds_dim = 4;
    double bounds_em = 1e-3, bounds_et = 1e-2;
    std::string bounds_out;
    bounds_cmd->add_option("--N", bounds_n, "factor count")->required();
    bounds_cmd->add_option("--dim", bounds_dim, "space dimension")->required();
    bounds_cmd->add_option("--epsilon-m", bounds_em, "machine epsilon")->required();
    bounds_cmd->add_option("--epsilon-t", bounds_et, "error tolerance");
    bounds_cmd->add_option("--out", bounds_out, "output JSON path");

    // hubbard
    auto* hubbard_cmd =
        app.add_subcommand("hubbard", "lattice-model cost and precision budget");
    tsd::HubbardParams params;
    std::string hubbard_boundary = "periodic", hubbard_out;
    hubbard_cmd->add_option("--t-h", params.t_h, "hopping amplitude");
    hubbard_cmd->add_option("--u-h", params.u_h, "on-site interaction");
    hubbard_cmd->add_option("--eta", params.eta, "lattice side length");
    hubbard_cmd->add_option("--time", params.sim_time, "simulation time |t|");
    hubbard_cmd->add_option("--epsilon-t", params.epsilon_t, "error tolerance");
    hubbard_cmd->add_option("--boundary", hubbard_boundary, "open or periodic");
    hubbard_cmd->add_option("--out", hubbard_out, "output JSON path");

    // repro
    auto* repro_cmd = app.add_subcommand(
        "repro", "run the bundled fixed-seed campaigns");
    CommonFlags repro_flags;
    add_common(repro_cmd, repro_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (schedule_cmd->parsed())
            return run_schedule(sched_config, sched_m, sched_order, sched_r,
                                sched_lambda, sched_trotter, sched_merge,
                                sched_steps > 0, sched_steps, sched_out);
        if (ideal_cmd->parsed()) return run_ideal_error(ideal_config, ideal_flags);
        if (sim_cmd->parsed()) return run_noise_sim(sim_config, sim_flags);
        if (bounds_cmd->parsed())
            return run_bounds(bounds_n, bounds_dim, bounds_em, bounds_et,
                              bounds_out);
        if (hubbard_cmd->parsed()) {
            params.boundary = tsd::boundary_from_string(hubbard_boundary);
            return run_hubbard(params, hubbard_out);
        }
        if (repro_cmd->parsed()) {
            const fs::path out =
                repro_flags.out ? fs::path(*repro_flags.out) : fs::path("repro_out");
            tsd::repro::write_all(out,
                                  repro_flags.seed.value_or(tsd::repro::kDefaultSeed),
                                  repro_flags.trials.value_or(0),
                                  repro_flags.threads);
            std::cout << "campaign outputs written to " << out.string() << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::range_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
