#pragma once

#include <vector>

#include "wasync/core/automaton.hpp"
#include "wasync/engines/limits.hpp"

namespace wasync {

struct MaxSyncSetResult {
  StateSet set;
  Word witness;  ///< image(a, set, witness) == {target}
  State target = 0;
  std::size_t subsets_tested = 0;
};

enum class MaxSyncMode {
  /// Cardinality descent: for c = n down to 1, test c-subsets in
  /// lexicographic order and stop at the first synchronizing one. Sound
  /// because subsets of synchronizing sets are synchronizing.
  kExact,
  /// Grows a set greedily in index order; maximal by inclusion only.
  kWitnessOnly,
  /// Largest preimage fiber over the enumerated transition monoid. Exact;
  /// kept as an independent cross-check of kExact.
  kMonoid,
};

struct MaxSyncOptions {
  MaxSyncMode mode = MaxSyncMode::kExact;
  /// Number of candidate subsets kExact may test with a subset search.
  std::size_t subset_budget = std::size_t{1} << 22;
  std::size_t monoid_cap = std::size_t{1} << 20;
  SearchLimits limits;
};

MaxSyncSetResult max_sync_set(const Dfa& a, const MaxSyncOptions& options = {});

/// Unary automata: after n steps every state sits on a cycle, where the
/// letter is injective, so the largest fiber of delta^n is optimal.
MaxSyncSetResult max_sync_set_unary(const Dfa& a);

struct EulerianPartitionReport {
  std::size_t rank = 0;
  /// Inclusion-maximal synchronizing sets, sorted lexicographically.
  std::vector<StateSet> classes;
  bool is_partition = false;       ///< pairwise disjoint and covering Q
  bool count_matches_rank = false; ///< classes.size() == rank
  bool equal_sizes = false;        ///< every class has n / rank states

  bool passed() const noexcept { return is_partition && count_matches_rank && equal_sizes; }
};

/// Computes the exact rank and all inclusion-maximal synchronizing sets of
/// an Eulerian automaton and checks that those sets partition Q into `rank`
/// classes of equal size. Throws InputError on non-Eulerian input.
EulerianPartitionReport verify_eulerian_partition(const Dfa& a, const SearchLimits& limits = {});

/// All inclusion-maximal synchronizing sets: the maximal members of the
/// family of preimages w^-1(q) over all words w and states q.
std::vector<StateSet> maximal_sync_sets(const Dfa& a, const SearchLimits& limits = {});

}  // namespace wasync
