#pragma once

#include "wasync/core/automaton.hpp"
#include "wasync/core/structure.hpp"
#include "wasync/engines/limits.hpp"

namespace wasync {

struct RankResult {
  std::size_t rank = 0;
  Word witness;
  StateSet final_image;  ///< image of the start set under witness; |final_image| == rank
  std::size_t explored = 0;
};

/// Greedy word for a weakly acyclic automaton: while the running image of Q
/// holds a non-sink state, take the one earliest in `order` and apply the
/// smallest letter that moves it. Length <= n - r and rank <= r, where r is
/// the number of sink states. Throws InputError if `order` is not a
/// topological sort of `a`.
RankResult greedy_rank_word_wa(const Dfa& a, const TopoOrder& order);
RankResult greedy_rank_word_wa(const Dfa& a);

enum class RankMode {
  kAuto,   ///< sink-count fast path when weakly acyclic, exact search otherwise
  kExact,  ///< always search images of Q; witness is shortest among minimum-rank words
};

RankResult rank_of_automaton(const Dfa& a, RankMode mode = RankMode::kAuto,
                             const SearchLimits& limits = {});

/// Minimum |delta(s, w)| over all words, with a shortest (then least) witness.
RankResult rank_of_subset(const Dfa& a, const StateSet& s, const SearchLimits& limits = {});

}  // namespace wasync
