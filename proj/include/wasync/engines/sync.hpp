#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wasync/core/automaton.hpp"
#include "wasync/engines/limits.hpp"

namespace wasync {

struct SyncResult {
  bool synchronizing = false;
  std::optional<Word> witness;  ///< present iff synchronizing
  std::optional<State> target;  ///< the single state the witness leads to
  std::size_t explored = 0;     ///< distinct image sets (or pairs) visited
};

/// Shortest words merging pairs of states, from a backward search of the
/// pair graph starting at the diagonal. Polynomial in n.
class PairMerger {
 public:
  explicit PairMerger(const Dfa& a);

  bool mergeable(State p, State q) const;
  /// A shortest word w with delta(p, w) == delta(q, w). Requires mergeable.
  Word merge_word(State p, State q) const;
  /// Pairs p < q (plus the n diagonal nodes) reached by the backward search.
  std::size_t reached() const noexcept { return reached_; }
  bool all_mergeable() const noexcept { return reached_ == n_ + n_ * (n_ - 1) / 2; }

 private:
  std::size_t index(State p, State q) const;

  const Dfa* dfa_;
  std::size_t n_;
  std::size_t reached_ = 0;
  std::vector<std::uint32_t> dist_;   // UINT32_MAX = unreachable
  std::vector<Letter> letter_;
  std::vector<std::uint32_t> next_;   // pair index after reading letter_
};

/// Pair test. The witness is assembled by repeated pair merging and has
/// length at most n^3; it is not necessarily shortest.
SyncResult is_synchronizing(const Dfa& a);

/// Shortest (then lexicographically least) synchronizing word.
/// Requires n_states <= limits.state_cap.
SyncResult shortest_sync_word(const Dfa& a, const SearchLimits& limits = {});

/// Shortest (then lexicographically least) word synchronizing `s`. Decides
/// the Sync Set problem. No state cap; the visited budget applies.
SyncResult subset_shortest_sync_word(const Dfa& a, const StateSet& s,
                                     const SearchLimits& limits = {});

/// Shortest word carefully synchronizing a partial automaton: every prefix
/// must be defined on the whole running image.
SyncResult careful_shortest_word(const PartialDfa& a, const SearchLimits& limits = {});

struct ReachResult {
  bool reachable = false;
  std::optional<Word> witness;
  std::size_t explored = 0;
};

/// Is there a word w with {delta(q, w) | q in Q} == target exactly?
ReachResult is_subset_reachable(const Dfa& a, const StateSet& target,
                                const SearchLimits& limits = {});

/// An automaton with an initial state and accepting states.
struct Acceptor {
  Dfa automaton;
  State initial;
  StateSet accepting;
};

struct IntersectionResult {
  bool nonempty = false;
  std::optional<Word> witness;  ///< shortest, then lexicographically least
  std::size_t explored = 0;     ///< product tuples visited
};

/// Breadth-first search of the product automaton. All acceptors must share
/// the alphabet size. The visited budget caps the number of product tuples.
IntersectionResult intersection_nonempty(std::span<const Acceptor> acceptors,
                                         const SearchLimits& limits = {});

}  // namespace wasync
