#include "wasync/engines/transition_monoid.hpp"

#include <string>
#include <unordered_set>

#include "wasync/core/error.hpp"

namespace wasync {

TransitionMonoid TransitionMonoid::enumerate(const Dfa& a, std::size_t element_cap) {
  TransitionMonoid m;
  m.n_ = a.n_states();
  const std::size_t n = m.n_;

  // Transformations are keyed by their raw bytes.
  auto key = [n](const State* f) {
    return std::string(reinterpret_cast<const char*>(f), n * sizeof(State));
  };
  std::unordered_set<std::string> seen;

  auto push = [&](std::vector<State> f, Word w) {
    if (m.words_.size() >= element_cap) throw ResourceError("monoid_element_cap", element_cap);
    seen.insert(key(f.data()));
    m.data_.insert(m.data_.end(), f.begin(), f.end());
    m.words_.push_back(std::move(w));
  };

  std::vector<State> id(n);
  for (State q = 0; q < n; ++q) id[q] = q;
  push(std::move(id), Word{});

  std::vector<State> next(n);
  for (std::size_t head = 0; head < m.words_.size(); ++head) {
    for (Letter x = 0; x < a.n_letters(); ++x) {
      const State* f = m.data_.data() + head * n;
      for (std::size_t q = 0; q < n; ++q) next[q] = a.next(f[q], x);
      if (seen.count(key(next.data())) != 0) continue;
      Word w = m.words_[head];
      w.push_back(x);
      push(next, std::move(w));
    }
  }
  return m;
}

}  // namespace wasync
