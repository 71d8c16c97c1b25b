#include "wasync/oracles/word_enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <cstdint>
#include <vector>

#include "wasync/core/error.hpp"

namespace wasync {

namespace {

struct Enumerator {
  const Dfa& a;
  std::vector<Letter> letters;
  std::size_t tried = 0;

  std::uint64_t step(std::uint64_t mask, Letter x) const {
    std::uint64_t out = 0;
    while (mask != 0) {
      const auto q = static_cast<State>(std::countr_zero(mask));
      mask &= mask - 1;
      out |= std::uint64_t{1} << a.at(q, x);
    }
    return out;
  }

  // Depth-first over words of exactly `remaining` more letters.
  bool extend(std::uint64_t mask, std::size_t remaining) {
    if (remaining == 0) {
      ++tried;
      return std::popcount(mask) <= 1;
    }
    for (Letter x = 0; x < a.n_letters(); ++x) {
      letters.push_back(x);
      if (extend(step(mask, x), remaining - 1)) return true;
      letters.pop_back();
    }
    return false;
  }
};

}  // namespace

EnumerationResult enumerate_sync_word(const Dfa& a, const StateSet& start, std::size_t max_len) {
  if (a.n_states() > 64) throw InputError("word enumeration supports at most 64 states");
  if (start.universe_size() != a.n_states()) throw InputError("start set universe does not match automaton");
  std::uint64_t mask = 0;
  start.for_each([&](State q) { mask |= std::uint64_t{1} << q; });

  Enumerator e{a, {}};
  EnumerationResult out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (e.extend(mask, len)) {
      out.word = Word(e.letters);
      break;
    }
    if (a.n_letters() == 0) break;
  }
  out.words_tried = e.tried;
  return out;
}

EnumerationResult enumerate_sync_word(const Dfa& a, std::size_t max_len) {
  StateSet all(a.n_states());
  for (State q = 0; q < a.n_states(); ++q) all.insert(q);
  return enumerate_sync_word(a, all, max_len);
}

MonoidOracleResult monoid_shortest_sync_word(const Dfa& a, std::size_t cap) {
  using Map = std::vector<State>;
  auto constant = [](const Map& m) {
    return std::adjacent_find(m.begin(), m.end(), std::not_equal_to<>()) == m.end();
  };

  Map id(a.n_states());
  for (State q = 0; q < a.n_states(); ++q) id[q] = q;
  std::map<Map, std::size_t> seen{{id, 0}};
  std::vector<const Map*> order{&seen.begin()->first};
  std::vector<std::pair<std::size_t, Letter>> parent{{0, 0}};

  MonoidOracleResult out;
  auto word_of = [&](std::size_t i) {
    std::vector<Letter> letters;
    for (; i != 0; i = parent[i].first) letters.push_back(parent[i].second);
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
  };

  if (constant(id)) {
    out.word = Word{};
    out.elements = 1;
    return out;
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Letter x = 0; x < a.n_letters(); ++x) {
      Map next(a.n_states());
      for (State q = 0; q < a.n_states(); ++q) next[q] = a.at((*order[head])[q], x);
      auto [it, fresh] = seen.emplace(std::move(next), order.size());
      if (!fresh) continue;
      if (order.size() >= cap) throw ResourceError("monoid_elements", cap);
      order.push_back(&it->first);
      parent.emplace_back(head, x);
      if (constant(it->first)) {
        out.word = word_of(order.size() - 1);
        out.elements = order.size();
        return out;
      }
    }
  }
  out.elements = order.size();
  return out;
}

}  // namespace wasync
