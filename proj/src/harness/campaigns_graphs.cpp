#include <string>

#include "campaigns.hpp"
#include "wasync/core/structure.hpp"
#include "wasync/engines/max_sync.hpp"
#include "wasync/engines/rank.hpp"
#include "wasync/gadgets/maxsync_gadgets.hpp"
#include "wasync/gadgets/rank_gadgets.hpp"
#include "wasync/harness/generators.hpp"
#include "wasync/oracles/brute.hpp"

namespace wasync::detail {

namespace {

using std::to_string;

struct GraphCase {
  std::string label;
  Graph graph;
};

// Every graph on 1..exhaustive vertices, then `count` random graphs with
// 1..p_max vertices and a per-instance edge density.
std::vector<GraphCase> graph_cases(const CampaignParams& params, std::size_t exhaustive, std::size_t p_max,
                                   std::size_t count) {
  std::vector<GraphCase> out;
  for (std::size_t p = 1; p <= exhaustive; ++p) {
    std::size_t idx = 0;
    for (auto& g : all_graphs(p)) out.push_back({"p=" + to_string(p) + " all#" + to_string(idx++), std::move(g)});
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(params.seed, i);
    const std::size_t p = 1 + static_cast<std::size_t>(s % p_max);
    const double density = static_cast<double>((s >> 20) % 1000) / 1000.0;
    out.push_back({"p=" + to_string(p) + " rand#" + to_string(i), gen_random_graph(p, density, derive_seed(s, 1))});
  }
  return out;
}

MaxSyncOptions options_from(const SearchLimits& limits) {
  MaxSyncOptions opts;
  opts.limits = limits;
  return opts;
}

std::vector<InstanceTask> is_maxsync_large(const CampaignParams& params) {
  const auto cases = graph_cases(params, static_cast<std::size_t>(params.option("exhaustive_p", 4)),
                                 static_cast<std::size_t>(params.option("p_max", 6)), params.count_or(300));
  std::vector<InstanceTask> tasks;
  for (const auto& c : cases) {
    tasks.push_back({c.label, [g = c.graph, limits = params.limits] {
      const std::size_t alpha = max_independent_set_brute(g).alpha;
      const GadgetBundle b = gadget_is_maxsync_large_alphabet(g);
      const MaxSyncSetResult best = max_sync_set(b.dfa(), options_from(limits));
      InstanceOutcome out;
      out.digest = b.source.instance_digest;
      out.expected = "max=" + to_string(alpha + 1);
      out.computed = "max=" + to_string(best.set.size());
      if (!synchronizes(b.dfa(), best.set, best.witness)) out.computed += " bad-witness";
      return out;
    }});
  }
  return tasks;
}

// Exact on p <= exact_p when alpha > 1; witness check on larger p.
std::vector<InstanceTask> is_maxsync_binary(const CampaignParams& params) {
  const auto exact_p = static_cast<std::size_t>(params.option("exact_p", 2));
  const auto witness_p = static_cast<std::size_t>(params.option("witness_p", 3));
  std::vector<InstanceTask> tasks;
  for (std::size_t p = 1; p <= witness_p; ++p) {
    std::size_t idx = 0;
    for (auto& g : all_graphs(p)) {
      const std::string label = "p=" + to_string(p) + " all#" + to_string(idx++);
      tasks.push_back({label, [g = std::move(g), p, exact_p, limits = params.limits] {
        const IndependentSet is = max_independent_set_brute(g);
        const GadgetBundle b = gadget_is_maxsync_binary(g);
        const StateSet wset = is_gadget_witness_set(b, is.vertices);
        const Word word = is_gadget_witness_word(p, is.vertices);
        InstanceOutcome out;
        out.digest = b.source.instance_digest;
        out.expected = "states=" + to_string(4 * p * p - p) + " witness=" + to_string(p * is.alpha + 1) + " sync";
        out.computed = "states=" + to_string(b.table().n_states()) + " witness=" + to_string(wset.size()) +
                       (synchronizes(b.dfa(), wset, word) ? " sync" : " not-sync");
        if (p <= exact_p && is.alpha > 1) {
          const MaxSyncSetResult best = max_sync_set(b.dfa(), options_from(limits));
          out.expected += " max=" + to_string(p * is.alpha + 1);
          out.computed += " max=" + to_string(best.set.size());
        }
        return out;
      }});
    }
  }
  return tasks;
}

std::vector<InstanceTask> is_maxsync_binary_wa(const CampaignParams& params) {
  const auto exact_p = static_cast<std::size_t>(params.option("exact_p", 2));
  const auto witness_p = static_cast<std::size_t>(params.option("witness_p", 3));
  std::vector<InstanceTask> tasks;
  for (std::size_t p = 1; p <= witness_p; ++p) {
    std::size_t idx = 0;
    for (auto& g : all_graphs(p)) {
      const std::string label = "p=" + to_string(p) + " all#" + to_string(idx++);
      tasks.push_back({label, [g = std::move(g), p, exact_p, limits = params.limits] {
        const IndependentSet is = max_independent_set_brute(g);
        const GadgetBundle b = gadget_is_maxsync_binary_wa(g);
        const StateSet wset = is_gadget_witness_set(b, is.vertices);
        const Word word = is_gadget_witness_word(p, is.vertices);
        const std::size_t pp = p * p;
        InstanceOutcome out;
        out.digest = b.source.instance_digest;
        out.expected = "states=" + to_string(2 * p * p * p + 2 * p * p - 2 * p + 1) + " weakly_acyclic witness=" +
                       to_string(pp * is.alpha + 1) + " sync";
        out.computed = "states=" + to_string(b.table().n_states()) +
                       (is_weakly_acyclic(b.table()) ? " weakly_acyclic" : " cyclic") +
                       " witness=" + to_string(wset.size()) +
                       (synchronizes(b.dfa(), wset, word) ? " sync" : " not-sync");
        if (p <= exact_p) {
          const std::size_t lo = pp * is.alpha;
          const std::size_t hi = lo + p * (p - 1) + 1;
          const std::size_t got = max_sync_set(b.dfa(), options_from(limits)).set.size();
          const std::string bracket = " max in [" + to_string(lo) + "," + to_string(hi) + "]";
          out.expected += bracket;
          out.computed += (got >= lo && got <= hi) ? bracket : " max=" + to_string(got);
          out.note = "max=" + to_string(got);
        }
        return out;
      }});
    }
  }
  return tasks;
}

template <class Build>
std::vector<InstanceTask> chromatic(const CampaignParams& params, Build build) {
  const auto cases = graph_cases(params, static_cast<std::size_t>(params.option("exhaustive_p", 4)),
                                 static_cast<std::size_t>(params.option("p_max", 5)), params.count_or(100));
  std::vector<InstanceTask> tasks;
  for (const auto& c : cases) {
    tasks.push_back({c.label, [g = c.graph, build, limits = params.limits] {
      const std::size_t chi = chromatic_number_brute(g).chi;
      const GadgetBundle b = build(g);
      const RankResult r = rank_of_subset(b.dfa(), *b.subset, limits);
      InstanceOutcome out;
      out.digest = b.source.instance_digest;
      out.expected = "rank=" + to_string(chi) + " weakly_acyclic";
      out.computed = "rank=" + to_string(r.rank) + (is_weakly_acyclic(b.table()) ? " weakly_acyclic" : " cyclic");
      return out;
    }});
  }
  return tasks;
}

}  // namespace

std::vector<CampaignSpec> graph_campaigns() {
  return {
      {"is-maxsync-large", "independent set to max sync set, large alphabet", is_maxsync_large},
      {"is-maxsync-binary", "independent set to max sync set, binary with cycle", is_maxsync_binary},
      {"is-maxsync-binary-wa", "independent set to max sync set, binary weakly acyclic", is_maxsync_binary_wa},
      {"chromatic-rank", "chromatic number to subset rank, p+1 letters",
       [](const CampaignParams& p) { return chromatic(p, gadget_chromatic_rank); }},
      {"chromatic-rank-binary", "chromatic number to subset rank, binary",
       [](const CampaignParams& p) { return chromatic(p, gadget_chromatic_rank_binary); }},
  };
}

}  // namespace wasync::detail
