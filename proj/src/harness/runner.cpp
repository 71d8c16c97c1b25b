#include "wasync/harness/runner.hpp"

#include <chrono>

#include "campaigns.hpp"
#include "wasync/core/error.hpp"
#include "wasync/gadgets/digest.hpp"

namespace wasync {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

InstanceRecord evaluate(const InstanceTask& task) {
  InstanceRecord rec;
  rec.label = task.label;
  const auto start = Clock::now();
  try {
    InstanceOutcome out = task.run();
    rec.instance_digest = std::move(out.digest);
    rec.expected = std::move(out.expected);
    rec.computed = std::move(out.computed);
    rec.note = std::move(out.note);
    rec.status = classify(rec.expected, rec.computed, out.conclusive);
  } catch (const ResourceError& e) {
    rec.status = RecordStatus::kInconclusive;
    rec.computed = "unknown";
    rec.note = e.what();
  } catch (const std::exception& e) {
    rec.status = RecordStatus::kFail;
    rec.computed = "error";
    rec.note = e.what();
  }
  rec.millis = millis_since(start);
  return rec;
}

}  // namespace

std::int64_t CampaignParams::option(const std::string& key, std::int64_t fallback) const {
  auto it = options.find(key);
  return it == options.end() ? fallback : it->second;
}

const std::vector<CampaignSpec>& campaign_registry() {
  static const std::vector<CampaignSpec> registry = [] {
    std::vector<CampaignSpec> all;
    for (auto group : {detail::bound_campaigns, detail::graph_campaigns, detail::sat_campaigns,
                       detail::engine_campaigns}) {
      auto part = group();
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }();
  return registry;
}

const CampaignSpec* find_campaign(std::string_view name) {
  for (const auto& c : campaign_registry()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport run_tasks(const std::string& campaign, const CampaignParams& params,
                             const std::vector<InstanceTask>& tasks) {
  VerificationReport report;
  report.campaign = campaign;
  report.seed = params.seed;
  report.params = params.options;
  if (params.count != 0) report.params["count"] = params.count;
  report.records.resize(tasks.size());

  const auto start = Clock::now();
  const auto n = static_cast<std::ptrdiff_t>(tasks.size());
  if (params.serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) report.records[i] = evaluate(tasks[i]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) report.records[i] = evaluate(tasks[i]);
  }
  report.wall_millis = millis_since(start);
  finalize(report);
  return report;
}

VerificationReport run_campaign(std::string_view name, const CampaignParams& params) {
  const CampaignSpec* spec = find_campaign(name);
  if (spec == nullptr) throw InputError("unknown campaign '" + std::string(name) + "'");
  return run_tasks(spec->name, params, spec->build(params));
}

}  // namespace wasync

namespace wasync::detail {

std::string instance_digest(std::string_view campaign, std::string_view text) {
  std::string data(campaign);
  data += '\n';
  data += text;
  return sha256_hex(data);
}

bool synchronizes(const Dfa& a, const StateSet& s, const Word& w) {
  return image(a, s, w).size() == 1;
}

}  // namespace wasync::detail
