#pragma once

#include <optional>

#include "wasync/core/automaton.hpp"

namespace wasync {

struct EnumerationResult {
  /// Length-lex first word taking `start` to a singleton, if one of length
  /// at most max_len exists.
  std::optional<Word> word;
  std::size_t words_tried = 0;
};

/// Reference search with no state-set memory: tries every word of length
/// 0, 1, ..., max_len in lexicographic order. Exponential in max_len by
/// design. Requires at most 64 states.
EnumerationResult enumerate_sync_word(const Dfa& a, const StateSet& start, std::size_t max_len);
EnumerationResult enumerate_sync_word(const Dfa& a, std::size_t max_len);

struct MonoidOracleResult {
  /// Length-lex first word whose transformation is constant; nullopt means
  /// the whole transition monoid was generated without finding one.
  std::optional<Word> word;
  std::size_t elements = 0;
};

/// Breadth-first generation of the transition monoid, one full
/// transformation per element, stopping at the first constant map.
/// ResourceError once more than `cap` elements are stored.
MonoidOracleResult monoid_shortest_sync_word(const Dfa& a, std::size_t cap = std::size_t{1} << 20);

}  // namespace wasync
