#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace wasync {

inline constexpr int kReportSchemaVersion = 1;

enum class RecordStatus { kPass, kFail, kInconclusive };

const char* to_string(RecordStatus status);

struct InstanceRecord {
  std::string instance_digest;
  std::string label;
  std::string expected;
  std::string computed;
  RecordStatus status = RecordStatus::kPass;
  double millis = 0.0;
  std::string note;
};

struct VerificationReport {
  std::string campaign;
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();
  std::size_t instance_count = 0;
  std::vector<InstanceRecord> records;  ///< sorted by (instance_digest, label)
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
  double wall_millis = 0.0;

  bool ok() const noexcept { return failed == 0; }
};

/// Fail iff both sides are conclusive and differ.
RecordStatus classify(const std::string& expected, const std::string& computed, bool conclusive);

/// Sorts records, recomputes the summary counts.
void finalize(VerificationReport& report);

/// Timing fields are omitted when `timings` is false, which makes the
/// output byte-identical across runs with the same inputs.
nlohmann::json report_to_json(const VerificationReport& report, bool timings = true);
std::string report_to_table(const VerificationReport& report, bool timings = true);

}  // namespace wasync
