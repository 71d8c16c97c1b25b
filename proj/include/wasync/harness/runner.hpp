#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wasync/engines/limits.hpp"
#include "wasync/harness/report.hpp"

namespace wasync {

struct CampaignParams {
  std::uint64_t seed = 1;
  /// Random instances to draw; 0 selects the campaign's default. Exhaustive
  /// parts of a campaign (all small graphs, parameter sweeps) ignore it.
  std::size_t count = 0;
  /// Campaign-specific integer knobs such as n_max or p_max.
  std::map<std::string, std::int64_t> options;
  /// Run instances on the calling thread only.
  bool serial = false;
  SearchLimits limits = SearchLimits::from_environment();

  std::int64_t option(const std::string& key, std::int64_t fallback) const;
  std::size_t count_or(std::size_t fallback) const { return count == 0 ? fallback : count; }
};

struct InstanceOutcome {
  std::string digest;
  std::string expected;
  std::string computed;
  bool conclusive = true;
  std::string note;
};

struct InstanceTask {
  std::string label;
  std::function<InstanceOutcome()> run;
};

struct CampaignSpec {
  std::string name;
  std::string summary;
  std::function<std::vector<InstanceTask>(const CampaignParams&)> build;
};

const std::vector<CampaignSpec>& campaign_registry();
const CampaignSpec* find_campaign(std::string_view name);

/// Builds the instance list, evaluates it (OpenMP over instances unless
/// params.serial) and assembles the report. ResourceError inside an
/// instance yields an inconclusive record; any other exception a failure.
/// Throws InputError for an unknown campaign name.
VerificationReport run_campaign(std::string_view name, const CampaignParams& params);

VerificationReport run_tasks(const std::string& campaign, const CampaignParams& params,
                             const std::vector<InstanceTask>& tasks);

}  // namespace wasync
