#pragma once

#include <span>
#include <vector>

#include "wasync/core/automaton.hpp"

namespace wasync {

/// The transformations delta(., w) for all words w, each with the shortest
/// (then lexicographically least) word inducing it. Element 0 is the
/// identity (empty word). Enumeration is breadth-first over transformations.
class TransitionMonoid {
 public:
  /// Throws ResourceError once more than `element_cap` elements appear.
  static TransitionMonoid enumerate(const Dfa& a, std::size_t element_cap);

  std::size_t size() const noexcept { return words_.size(); }
  std::size_t n_states() const noexcept { return n_; }
  std::span<const State> element(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  const Word& word(std::size_t i) const { return words_[i]; }

 private:
  std::size_t n_ = 0;
  std::vector<State> data_;
  std::vector<Word> words_;
};

}  // namespace wasync
