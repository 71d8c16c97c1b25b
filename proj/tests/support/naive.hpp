#pragma once

// Reference implementations used only by tests. They share no code with the
// library engines: plain std::vector / std::set containers, no bitsets.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "wasync/core/automaton.hpp"

namespace naive {

/// delta[q][a], -1 for undefined.
struct Table {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> delta;
};

Table from(const wasync::TransitionTable& t);

using Set = std::set<int>;
using Letters = std::vector<int>;

Set all(const Table& t);
Set to_set(const wasync::StateSet& s);
Letters to_letters(const wasync::Word& w);

/// Image of `s` under `w`; nullopt if some transition is undefined on the way.
std::optional<Set> image(const Table& t, const Set& s, const Letters& w);

/// Length-lex first word mapping `s` to a singleton, by BFS over std::set
/// images, skipping letters undefined on the running image.
std::optional<Letters> shortest_sync(const Table& t, const Set& s);

/// Minimum image size reachable from `s`.
std::size_t rank(const Table& t, const Set& s);

/// Is `target` an image of Q?
bool reachable(const Table& t, const Set& target);

/// Full transformation monoid (complete tables only), as vectors.
std::set<std::vector<int>> monoid(const Table& t);

/// Largest w^-1(q) over the monoid.
std::size_t max_sync_size(const Table& t);

/// Product BFS; shortest common accepted word.
struct Acceptor {
  Table table;
  int initial;
  Set accepting;
};
std::optional<Letters> intersection(const std::vector<Acceptor>& as);

using Matrix = std::vector<std::vector<bool>>;
Matrix mul(const Matrix& a, const Matrix& b);

/// Does a non-self-loop cycle exist? (DFS colouring.)
bool has_proper_cycle(const Table& t);

// Hand-rolled generators for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
  std::size_t range(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

  wasync::Dfa dfa(std::size_t n, std::size_t k);
  wasync::PartialDfa partial(std::size_t n, std::size_t k, double undefined);
  wasync::Word word(std::size_t k, std::size_t max_len);
  wasync::StateSet subset(std::size_t n);  ///< nonempty
};

}  // namespace naive
