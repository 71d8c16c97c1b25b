#include "wasync/harness/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace wasync {

const char* to_string(RecordStatus status) {
  switch (status) {
    case RecordStatus::kPass: return "pass";
    case RecordStatus::kFail: return "fail";
    case RecordStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

RecordStatus classify(const std::string& expected, const std::string& computed, bool conclusive) {
  if (!conclusive) return RecordStatus::kInconclusive;
  return expected == computed ? RecordStatus::kPass : RecordStatus::kFail;
}

void finalize(VerificationReport& report) {
  std::stable_sort(report.records.begin(), report.records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.instance_digest, a.label) < std::tie(b.instance_digest, b.label);
  });
  report.instance_count = report.records.size();
  report.passed = report.failed = report.inconclusive = 0;
  for (const auto& r : report.records) {
    switch (r.status) {
      case RecordStatus::kPass: ++report.passed; break;
      case RecordStatus::kFail: ++report.failed; break;
      case RecordStatus::kInconclusive: ++report.inconclusive; break;
    }
  }
}

nlohmann::json report_to_json(const VerificationReport& report, bool timings) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json j{{"instance_digest", r.instance_digest},
                     {"label", r.label},
                     {"expected", r.expected},
                     {"computed", r.computed},
                     {"status", to_string(r.status)}};
    if (!r.note.empty()) j["note"] = r.note;
    if (timings) j["millis"] = r.millis;
    records.push_back(std::move(j));
  }
  nlohmann::json out{{"schema_version", kReportSchemaVersion},
                     {"campaign", report.campaign},
                     {"seed", report.seed},
                     {"params", report.params},
                     {"instance_count", report.instance_count},
                     {"summary",
                      {{"pass", report.passed}, {"fail", report.failed}, {"inconclusive", report.inconclusive}}},
                     {"records", records}};
  if (timings) out["wall_millis"] = report.wall_millis;
  return out;
}

std::string report_to_table(const VerificationReport& report, bool timings) {
  std::ostringstream out;
  out << "campaign " << report.campaign << "  seed " << report.seed << "  instances " << report.instance_count
      << '\n';
  std::size_t label_w = 5;
  for (const auto& r : report.records) label_w = std::max(label_w, r.label.size());
  out << std::left << std::setw(14) << "digest" << std::setw(static_cast<int>(label_w + 2)) << "label"
      << std::setw(14) << "status" << "expected | computed\n";
  // Long reports list only the records that did not pass.
  const bool brief = report.records.size() > 40;
  for (const auto& r : report.records) {
    if (brief && r.status == RecordStatus::kPass) continue;
    out << std::setw(14) << r.instance_digest.substr(0, 12) << std::setw(static_cast<int>(label_w + 2)) << r.label
        << std::setw(14) << to_string(r.status) << r.expected;
    if (r.computed != r.expected) out << " | " << r.computed;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << '\n';
  }
  if (brief) out << "(" << report.passed << " passing records not listed)\n";
  out << "pass " << report.passed << "  fail " << report.failed << "  inconclusive " << report.inconclusive;
  if (timings) out << "  wall " << std::fixed << std::setprecision(1) << report.wall_millis << " ms";
  out << '\n';
  return out.str();
}

}  // namespace wasync
