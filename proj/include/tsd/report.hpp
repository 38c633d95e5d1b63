#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsd/bounds.hpp"
#include "tsd/campaign.hpp"
#include "tsd/config.hpp"

namespace tsd {

// Shortest decimal representation that round-trips.
std::string format_double(double value);

std::string trials_csv(const CampaignResult& result);

// Kolmogorov-Smirnov distance between a sample and a reference CDF.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

// satisfied / violated / not-applicable per bound, honoring each bound's
// premise (unitary factors for cor5, controlled norm ratio for thm3).
nlohmann::ordered_json bound_verdicts(const BoundReport& report,
                                      const ErrorStats& stats, NoiseMode mode,
                                      double epsilon_m, bool epsilon_t_given,
                                      int dim);

nlohmann::ordered_json campaign_summary(const Schedule& schedule,
                                        const NoiseSpec& noise,
                                        const CampaignResult& result, int dim,
                                        std::optional<double> epsilon_t);

void write_file(const std::filesystem::path& path, const std::string& contents);
std::string json_text(const nlohmann::ordered_json& j);

}  // namespace tsd
