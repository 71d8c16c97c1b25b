#include <string>

#include "campaigns.hpp"
#include "wasync/core/dfa_io.hpp"
#include "wasync/engines/sync.hpp"
#include "wasync/harness/generators.hpp"
#include "wasync/oracles/word_enumeration.hpp"

namespace wasync::detail {

namespace {

using std::to_string;

std::string word_text(const Dfa& a, const std::optional<Word>& w) {
  if (!w) return "not-sync";
  return "sync word=" + (w->empty() ? std::string("<empty>") : render_word(a, *w));
}

// The expected side comes from the monoid oracle; when its word is short,
// plain enumeration must reproduce it, otherwise the expected value records
// the disagreement and the record fails.
std::vector<InstanceTask> engine_oracle(const CampaignParams& params) {
  const auto n_max = static_cast<std::size_t>(params.option("n_max", 6));
  const auto k = static_cast<std::size_t>(params.option("k", 2));
  const auto enum_max = static_cast<std::size_t>(params.option("enum_max", 16));
  std::vector<InstanceTask> tasks;
  const std::size_t count = params.count_or(10000);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(params.seed, i);
    const std::size_t n = 1 + static_cast<std::size_t>(s % n_max);
    tasks.push_back({"n=" + to_string(n) + " #" + to_string(i), [=, limits = params.limits] {
      const Dfa a = gen_random_dfa(n, k, derive_seed(s, 1));
      InstanceOutcome out;
      out.digest = instance_digest("engine-oracle", serialize_dfa(a));

      const MonoidOracleResult mono = monoid_shortest_sync_word(a);
      out.expected = word_text(a, mono.word);
      if (mono.word && mono.word->size() <= enum_max) {
        const EnumerationResult en = enumerate_sync_word(a, mono.word->size());
        if (en.word != mono.word) out.expected += " oracle-disagreement(enumeration " + word_text(a, en.word) + ")";
      } else if (!mono.word) {
        // Non-synchronizing: enumeration up to enum_max must also find nothing.
        const EnumerationResult en = enumerate_sync_word(a, std::min(enum_max, n * n));
        if (en.word) out.expected += " oracle-disagreement(enumeration " + word_text(a, en.word) + ")";
      }

      const SyncResult shortest = shortest_sync_word(a, limits);
      const SyncResult pair = is_synchronizing(a);
      out.computed = word_text(a, shortest.witness);
      if (pair.synchronizing != shortest.synchronizing) out.computed += " pair-test-disagrees";
      if (pair.synchronizing && !synchronizes(a, StateSet::full(n), *pair.witness))
        out.computed += " pair-witness-invalid";
      return out;
    }});
  }
  return tasks;
}

}  // namespace

std::vector<CampaignSpec> engine_campaigns() {
  return {
      {"engine-oracle", "shortest synchronizing word vs monoid and enumeration oracles", engine_oracle},
  };
}

}  // namespace wasync::detail
