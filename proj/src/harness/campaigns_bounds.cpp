#include <string>

#include "campaigns.hpp"
#include "wasync/core/dfa_io.hpp"
#include "wasync/core/structure.hpp"
#include "wasync/engines/max_sync.hpp"
#include "wasync/engines/rank.hpp"
#include "wasync/engines/sync.hpp"
#include "wasync/gadgets/families.hpp"
#include "wasync/gadgets/maxsync_gadgets.hpp"
#include "wasync/harness/generators.hpp"

namespace wasync::detail {

namespace {

using std::to_string;

std::size_t pick(std::uint64_t seed, unsigned shift, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>((seed >> shift) % (hi - lo + 1));
}

std::string length_text(const SyncResult& r) {
  return r.synchronizing ? "sync len=" + to_string(r.witness->size()) : "not-sync";
}

// Greedy word of length <= n - r and rank <= r; exact rank equals r.
std::vector<InstanceTask> bound_prop1(const CampaignParams& params) {
  const auto n_max = static_cast<std::size_t>(params.option("n_max", 12));
  const auto k_max = static_cast<std::size_t>(params.option("k_max", 3));
  std::vector<InstanceTask> tasks;
  const std::size_t count = params.count_or(500);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(params.seed, i);
    const std::size_t n = pick(s, 0, 1, n_max);
    const std::size_t k = pick(s, 16, 1, k_max);
    tasks.push_back({"n=" + to_string(n) + " k=" + to_string(k) + " #" + to_string(i), [=, limits = params.limits] {
      const Dfa a = gen_random_weakly_acyclic(n, k, s);
      const std::size_t r = sink_states(a).size();
      const RankResult greedy = greedy_rank_word_wa(a);
      const std::size_t greedy_rank = image(a, StateSet::full(n), greedy.witness).size();
      const RankResult exact = rank_of_automaton(a, RankMode::kExact, limits);

      InstanceOutcome out;
      out.digest = instance_digest("bound-prop1", serialize_dfa(a));
      out.expected = "rank=" + to_string(r) + " greedy_len<=" + to_string(n - r) + " greedy_rank<=" + to_string(r);
      out.computed = "rank=" + to_string(exact.rank) +
                     (greedy.witness.size() <= n - r ? " greedy_len<=" + to_string(n - r)
                                                     : " greedy_len=" + to_string(greedy.witness.size())) +
                     (greedy_rank <= r ? " greedy_rank<=" + to_string(r) : " greedy_rank=" + to_string(greedy_rank));
      return out;
    }});
  }
  return tasks;
}

std::vector<InstanceTask> tight_family(const CampaignParams& params) {
  const auto n_max = static_cast<std::size_t>(params.option("n_max", 12));
  std::vector<InstanceTask> tasks;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      tasks.push_back({"n=" + to_string(n) + " r=" + to_string(r), [=, limits = params.limits] {
        const GadgetBundle b = family_tight_rank(n, r);
        const RankResult exact = rank_of_automaton(b.dfa(), RankMode::kExact, limits);
        InstanceOutcome out;
        out.digest = b.source.instance_digest;
        out.expected = "rank=" + to_string(r) + " len=" + to_string(n - r);
        out.computed = "rank=" + to_string(exact.rank) + " len=" + to_string(exact.witness.size());
        return out;
      }});
    }
  }
  return tasks;
}

std::vector<InstanceTask> family_fig1(const CampaignParams& params) {
  const auto n_min = static_cast<std::size_t>(params.option("n_min", 4));
  const auto n_max = static_cast<std::size_t>(params.option("n_max", 12));
  std::vector<InstanceTask> tasks;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    for (std::size_t k = 2; k < n; ++k) {
      tasks.push_back({"n=" + to_string(n) + " k=" + to_string(k), [=, limits = params.limits] {
        const GadgetBundle b = family_subset_binary(n, k);
        const SyncResult r = subset_shortest_sync_word(b.dfa(), *b.subset, limits);
        const std::size_t bound = k * (2 * n - k - 1) / 2;
        InstanceOutcome out;
        out.digest = b.source.instance_digest;
        out.expected = "sync len=" + to_string((k - 1) * (n - k)) + " singleton within_bound";
        out.computed = length_text(r);
        if (r.synchronizing) {
          out.computed += synchronizes(b.dfa(), *b.subset, *r.witness) ? " singleton" : " not-singleton";
          out.computed += r.witness->size() <= bound ? " within_bound" : " above_bound";
        }
        return out;
      }});
    }
  }
  return tasks;
}

std::vector<InstanceTask> family_reviewer(const CampaignParams& params) {
  const auto n_min = static_cast<std::size_t>(params.option("n_min", 4));
  const auto n_max = static_cast<std::size_t>(params.option("n_max", 10));
  std::vector<InstanceTask> tasks;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    for (std::size_t k = 2; k < n; ++k) {
      tasks.push_back({"n=" + to_string(n) + " k=" + to_string(k), [=, limits = params.limits] {
        const GadgetBundle b = family_subset_large_alphabet(n, k);
        const SyncResult r = subset_shortest_sync_word(b.dfa(), *b.subset, limits);
        InstanceOutcome out;
        out.digest = b.source.instance_digest;
        out.expected = "sync len=" + to_string((k - 1) * (2 * n - k - 2) / 2);
        out.computed = length_text(r);
        return out;
      }});
    }
  }
  return tasks;
}

// S' synchronizing in A' iff A has a synchronizing word of length <= p,
// with equal shortest lengths.
std::vector<InstanceTask> layered_subset(const CampaignParams& params) {
  const auto p_max = static_cast<std::size_t>(params.option("p_max", 6));
  std::vector<InstanceTask> tasks;
  const std::size_t count = params.count_or(200);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(params.seed, i);
    const std::size_t p = pick(s, 0, 1, p_max);
    tasks.push_back({"p=" + to_string(p) + " #" + to_string(i), [=, limits = params.limits] {
      const Dfa a = gen_random_dfa(p, 2, s);
      const SyncResult src = shortest_sync_word(a, limits);
      const GadgetBundle b = gadget_layered_subset(a);
      const SyncResult lifted = subset_shortest_sync_word(b.dfa(), *b.subset, limits);

      InstanceOutcome out;
      out.digest = b.source.instance_digest;
      const bool short_enough = src.synchronizing && src.witness->size() <= p;
      out.expected = "states=" + to_string(p * (p + 1)) + " " +
                     (short_enough ? "sync len=" + to_string(src.witness->size()) : std::string("not-sync"));
      out.computed = "states=" + to_string(b.table().n_states()) + " " + length_text(lifted);
      if (src.synchronizing && !short_enough) out.note = "shortest word of A exceeds p";
      return out;
    }});
  }
  return tasks;
}

// A synchronizing set of size >= c in A' iff S is synchronizing in A.
std::vector<InstanceTask> maxsync_padding(const CampaignParams& params) {
  const auto n_max = static_cast<std::size_t>(params.option("n_max", 4));
  const auto s_max = static_cast<std::size_t>(params.option("s_max", 2));
  std::vector<InstanceTask> tasks;
  const std::size_t count = params.count_or(100);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(params.seed, i);
    const std::size_t n = pick(s, 0, 1, n_max);
    const std::size_t size = pick(s, 16, 1, std::min(s_max, n));
    tasks.push_back({"n=" + to_string(n) + " |S|=" + to_string(size) + " #" + to_string(i),
                     [=, limits = params.limits] {
      const Dfa a = gen_random_dfa(n, 2, s);
      const StateSet subset = gen_random_subset(n, size, derive_seed(s, 1));
      const bool oracle = subset_shortest_sync_word(a, subset, limits).synchronizing;
      const GadgetBundle b = gadget_maxsync_padding(a, subset);
      MaxSyncOptions opts;
      opts.limits = limits;
      const MaxSyncSetResult best = max_sync_set(b.dfa(), opts);

      InstanceOutcome out;
      out.digest = b.source.instance_digest;
      out.expected = "reaches_c=" + yes_no(oracle);
      out.computed = "reaches_c=" + yes_no(static_cast<std::int64_t>(best.set.size()) >= *b.threshold);
      if (!synchronizes(b.dfa(), best.set, best.witness)) out.computed += " bad-witness";
      return out;
    }});
  }
  return tasks;
}

std::vector<InstanceTask> unary_maxsync(const CampaignParams& params) {
  const auto n_max = static_cast<std::size_t>(params.option("n_max", 10));
  std::vector<InstanceTask> tasks;
  const std::size_t count = params.count_or(500);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(params.seed, i);
    const std::size_t n = pick(s, 0, 1, n_max);
    tasks.push_back({"n=" + to_string(n) + " #" + to_string(i), [=, limits = params.limits] {
      const Dfa a = gen_random_dfa(n, 1, s);
      MaxSyncOptions opts;
      opts.limits = limits;
      const MaxSyncSetResult exact = max_sync_set(a, opts);
      const MaxSyncSetResult unary = max_sync_set_unary(a);
      InstanceOutcome out;
      out.digest = instance_digest("unary-maxsync", serialize_dfa(a));
      out.expected = "max=" + to_string(exact.set.size());
      out.computed = "max=" + to_string(unary.set.size());
      if (!synchronizes(a, unary.set, unary.witness)) out.computed += " bad-witness";
      return out;
    }});
  }
  return tasks;
}

// Strong connectivity is on by default; connected=0 draws unrestricted
// Eulerian automata, where the partition property can fail.
std::vector<InstanceTask> eulerian_partition(const CampaignParams& params) {
  const auto n_max = static_cast<std::size_t>(params.option("n_max", 6));
  const auto k = static_cast<std::size_t>(params.option("k", 2));
  const bool connected = params.option("connected", 1) != 0;
  std::vector<InstanceTask> tasks;
  const std::size_t count = params.count_or(100);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(params.seed, i);
    const std::size_t n = pick(s, 0, 1, n_max);
    tasks.push_back({"n=" + to_string(n) + " #" + to_string(i), [=, limits = params.limits] {
      const Dfa a = connected ? gen_random_eulerian_connected(n, k, s) : gen_random_eulerian(n, k, s);
      const EulerianPartitionReport rep = verify_eulerian_partition(a, limits);
      InstanceOutcome out;
      out.digest = instance_digest("eulerian-partition", serialize_dfa(a));
      out.expected = "partition";
      out.computed = rep.passed() ? std::string("partition")
                                  : "rank=" + to_string(rep.rank) + " classes=" + to_string(rep.classes.size()) +
                                        " disjoint_cover=" + yes_no(rep.is_partition) +
                                        " equal_sizes=" + yes_no(rep.equal_sizes);
      return out;
    }});
  }
  return tasks;
}

}  // namespace

std::vector<CampaignSpec> bound_campaigns() {
  return {
      {"bound-prop1", "greedy rank word on random weakly acyclic DFAs vs sink count and exact rank", bound_prop1},
      {"tight-family", "rank-r family needing words of length n-r", tight_family},
      {"family-fig1", "binary weakly acyclic subset family, length (k-1)(n-k)", family_fig1},
      {"family-reviewer", "large-alphabet subset family, length (k-1)(2n-k-2)/2", family_reviewer},
      {"layered-subset", "layered unrolling vs bounded shortest synchronizing word", layered_subset},
      {"maxsync-padding", "padding gadget: max sync set reaches c iff S synchronizing", maxsync_padding},
      {"unary-maxsync", "unary fiber algorithm vs exact max sync set", unary_maxsync},
      {"eulerian-partition", "maximal sync sets of Eulerian automata partition Q", eulerian_partition},
  };
}

}  // namespace wasync::detail
