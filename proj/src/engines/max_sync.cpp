#include "wasync/engines/max_sync.hpp"

#include <algorithm>
#include <unordered_set>

#include "wasync/core/error.hpp"
#include "wasync/core/structure.hpp"
#include "wasync/engines/rank.hpp"
#include "wasync/engines/sync.hpp"
#include "wasync/engines/transition_monoid.hpp"

namespace wasync {

namespace {

MaxSyncSetResult from_sync(StateSet set, const SyncResult& r, std::size_t tested) {
  return MaxSyncSetResult{std::move(set), *r.witness, *r.target, tested};
}

MaxSyncSetResult exact_descent(const Dfa& a, const MaxSyncOptions& options) {
  const std::size_t n = a.n_states();
  // Every pair inside a synchronizing set is mergeable, so candidates are
  // restricted to cliques of the mergeable-pair graph.
  const PairMerger merger(a);
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, true));
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      compatible[p][q] = compatible[q][p] = merger.mergeable(p, q);
    }
  }

  std::size_t tested = 0;
  std::vector<State> chosen;
  std::optional<MaxSyncSetResult> found;

  // Lexicographic enumeration of c-cliques; returns true once one synchronizes.
  auto search = [&](auto&& self, std::size_t c, State from) -> bool {
    if (chosen.size() == c) {
      if (++tested > options.subset_budget) {
        throw ResourceError("subset_budget", options.subset_budget);
      }
      StateSet s(n, std::span<const State>(chosen));
      auto r = subset_shortest_sync_word(a, s, options.limits);
      if (r.synchronizing) {
        found = from_sync(std::move(s), r, tested);
        return true;
      }
      return false;
    }
    const std::size_t remaining = c - chosen.size();
    for (State q = from; q + remaining <= n; ++q) {
      bool ok = true;
      for (State p : chosen) ok = ok && compatible[p][q];
      if (!ok) continue;
      chosen.push_back(q);
      if (self(self, c, q + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (std::size_t c = n; c >= 1; --c) {
    chosen.clear();
    if (search(search, c, 0)) return *found;
  }
  throw Error("cardinality descent found no synchronizing singleton");
}

MaxSyncSetResult greedy_grow(const Dfa& a, const MaxSyncOptions& options) {
  StateSet set(a.n_states());
  set.insert(0);
  std::size_t tested = 0;
  for (State q = 1; q < a.n_states(); ++q) {
    StateSet candidate = set;
    candidate.insert(q);
    ++tested;
    if (subset_shortest_sync_word(a, candidate, options.limits).synchronizing) set = std::move(candidate);
  }
  auto r = subset_shortest_sync_word(a, set, options.limits);
  return from_sync(std::move(set), r, tested);
}

MaxSyncSetResult monoid_fibers(const Dfa& a, const MaxSyncOptions& options) {
  const auto monoid = TransitionMonoid::enumerate(a, options.monoid_cap);
  const std::size_t n = a.n_states();
  std::size_t best_size = 0;
  std::size_t best_element = 0;
  State best_target = 0;
  std::vector<std::size_t> fiber(n);
  for (std::size_t i = 0; i < monoid.size(); ++i) {
    std::fill(fiber.begin(), fiber.end(), 0);
    for (State t : monoid.element(i)) ++fiber[t];
    for (State t = 0; t < n; ++t) {
      if (fiber[t] > best_size) {
        best_size = fiber[t];
        best_element = i;
        best_target = t;
      }
    }
  }
  StateSet set(n);
  const auto f = monoid.element(best_element);
  for (State q = 0; q < n; ++q) {
    if (f[q] == best_target) set.insert(q);
  }
  return MaxSyncSetResult{std::move(set), monoid.word(best_element), best_target, 0};
}

}  // namespace

MaxSyncSetResult max_sync_set(const Dfa& a, const MaxSyncOptions& options) {
  switch (options.mode) {
    case MaxSyncMode::kExact:
      return exact_descent(a, options);
    case MaxSyncMode::kWitnessOnly:
      return greedy_grow(a, options);
    case MaxSyncMode::kMonoid:
      return monoid_fibers(a, options);
  }
  throw InputError("unknown max sync mode");
}

MaxSyncSetResult max_sync_set_unary(const Dfa& a) {
  if (a.n_letters() != 1) throw InputError("max_sync_set_unary needs a unary automaton");
  const std::size_t n = a.n_states();
  std::vector<State> power(n);
  for (State q = 0; q < n; ++q) {
    State t = q;
    for (std::size_t step = 0; step < n; ++step) t = a.next(t, 0);
    power[q] = t;
  }
  std::vector<std::size_t> fiber(n, 0);
  for (State t : power) ++fiber[t];
  const auto best = static_cast<State>(std::max_element(fiber.begin(), fiber.end()) - fiber.begin());
  StateSet set(n);
  for (State q = 0; q < n; ++q) {
    if (power[q] == best) set.insert(q);
  }
  return MaxSyncSetResult{std::move(set), Word(std::vector<Letter>(n, 0)), best, 0};
}

std::vector<StateSet> maximal_sync_sets(const Dfa& a, const SearchLimits& limits) {
  const std::size_t n = a.n_states();
  if (n > limits.state_cap) throw ResourceError("state_cap", limits.state_cap);

  std::vector<std::vector<std::vector<State>>> preimage(a.n_letters(), std::vector<std::vector<State>>(n));
  for (State q = 0; q < n; ++q) {
    for (Letter x = 0; x < a.n_letters(); ++x) preimage[x][a.next(q, x)].push_back(q);
  }

  std::vector<StateSet> family;
  std::unordered_set<StateSet> seen;
  auto add = [&](StateSet s) {
    if (s.empty() || seen.count(s) != 0) return;
    if (family.size() >= limits.visited_budget) throw ResourceError("visited_budget", limits.visited_budget);
    seen.insert(s);
    family.push_back(std::move(s));
  };
  for (State q = 0; q < n; ++q) add(StateSet(n, {q}));
  for (std::size_t head = 0; head < family.size(); ++head) {
    for (Letter x = 0; x < a.n_letters(); ++x) {
      StateSet pre(n);
      family[head].for_each([&](State t) {
        for (State p : preimage[x][t]) pre.insert(p);
      });
      add(std::move(pre));
    }
  }

  std::sort(family.begin(), family.end(),
            [](const StateSet& x, const StateSet& y) { return x.size() > y.size(); });
  std::vector<StateSet> maximal;
  for (auto& s : family) {
    const bool covered = std::any_of(maximal.begin(), maximal.end(), [&](const StateSet& m) {
      return s.is_subset_of(m);
    });
    if (!covered) maximal.push_back(std::move(s));
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const StateSet& x, const StateSet& y) { return x.lex_less(y); });
  return maximal;
}

EulerianPartitionReport verify_eulerian_partition(const Dfa& a, const SearchLimits& limits) {
  if (!is_eulerian(a)) throw InputError("automaton is not Eulerian");
  EulerianPartitionReport report;
  report.rank = rank_of_automaton(a, RankMode::kExact, limits).rank;
  report.classes = maximal_sync_sets(a, limits);

  const std::size_t n = a.n_states();
  StateSet covered(n);
  bool disjoint = true;
  for (const auto& c : report.classes) {
    disjoint = disjoint && (covered & c).empty();
    covered |= c;
  }
  report.is_partition = disjoint && covered.size() == n;
  report.count_matches_rank = report.classes.size() == report.rank;
  report.equal_sizes = report.rank > 0 && n % report.rank == 0 &&
                       std::all_of(report.classes.begin(), report.classes.end(),
                                   [&](const StateSet& c) { return c.size() == n / report.rank; });
  return report;
}

}  // namespace wasync
