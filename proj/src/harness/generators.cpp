#include "wasync/harness/generators.hpp"

#include <algorithm>
#include <numeric>

#include "wasync/core/error.hpp"

namespace wasync {

namespace {

void require_positive(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw InputError("generators need n >= 1 and k >= 1");
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool reaches_all(const Dfa& a, bool reverse) {
  const std::size_t n = a.n_states();
  std::vector<std::vector<State>> adj(n);
  for (State q = 0; q < n; ++q) {
    for (Letter x = 0; x < a.n_letters(); ++x) {
      const State t = a.at(q, x);
      if (reverse) adj[t].push_back(q);
      else adj[q].push_back(t);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<State> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State t : adj[q]) {
      if (seen[t]) continue;
      seen[t] = true;
      ++count;
      stack.push_back(t);
    }
  }
  return count == n;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + index + 0x632be59bd9b4e019ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Dfa gen_random_weakly_acyclic(std::size_t n, std::size_t k, std::uint64_t seed) {
  require_positive(n, k);
  std::mt19937_64 rng(seed);
  std::vector<State> order(n);
  std::iota(order.begin(), order.end(), State{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<State> table(n * k);
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (std::size_t x = 0; x < k; ++x) table[order[pos] * k + x] = order[uniform(rng, pos, n - 1)];
  }
  return Dfa(n, k, std::move(table));
}

Dfa gen_random_dfa(std::size_t n, std::size_t k, std::uint64_t seed) {
  require_positive(n, k);
  std::mt19937_64 rng(seed);
  std::vector<State> table(n * k);
  for (auto& t : table) t = static_cast<State>(uniform(rng, 0, n - 1));
  return Dfa(n, k, std::move(table));
}

Dfa gen_random_eulerian(std::size_t n, std::size_t k, std::uint64_t seed) {
  require_positive(n, k);
  std::mt19937_64 rng(seed);
  std::vector<State> table;
  table.reserve(n * k);
  for (State q = 0; q < n; ++q) table.insert(table.end(), k, q);
  std::shuffle(table.begin(), table.end(), rng);
  return Dfa(n, k, std::move(table));
}

Dfa gen_random_eulerian_connected(std::size_t n, std::size_t k, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Dfa a = gen_random_eulerian(n, k, derive_seed(seed, attempt));
    if (is_strongly_connected(a)) return a;
  }
}

Graph gen_random_graph(std::size_t p, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < p; ++u) {
    for (Vertex v = u + 1; v < p; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(p, edges);
}

CnfFormula gen_random_cnf(std::size_t n, std::size_t m, std::size_t width, std::uint64_t seed) {
  if (n == 0 || width == 0) throw InputError("gen_random_cnf needs n >= 1 and width >= 1");
  std::mt19937_64 rng(seed);
  width = std::min(width, n);
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 1);
  std::vector<std::vector<int>> clauses;
  for (std::size_t j = 0; j < m; ++j) {
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<int> clause(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(width));
    std::sort(clause.begin(), clause.end());
    for (int& lit : clause) {
      if (uniform(rng, 0, 1) == 1) lit = -lit;
    }
    clauses.push_back(std::move(clause));
  }
  return CnfFormula(n, std::move(clauses));
}

StateSet gen_random_subset(std::size_t n, std::size_t size, std::uint64_t seed) {
  if (size > n) throw InputError("subset larger than universe");
  std::mt19937_64 rng(seed);
  std::vector<State> all(n);
  std::iota(all.begin(), all.end(), State{0});
  std::shuffle(all.begin(), all.end(), rng);
  StateSet s(n);
  for (std::size_t i = 0; i < size; ++i) s.insert(all[i]);
  return s;
}

bool is_strongly_connected(const Dfa& a) {
  if (a.n_states() == 0) return true;
  return reaches_all(a, false) && reaches_all(a, true);
}

}  // namespace wasync
