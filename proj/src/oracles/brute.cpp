#include "wasync/oracles/brute.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>

#include "wasync/core/error.hpp"

namespace wasync {

std::optional<Assignment> sat_solve_brute(const CnfFormula& f) {
  const std::size_t n = f.n_vars();
  if (n > kMaxBruteSatVars) throw ResourceError("sat_vars", kMaxBruteSatVars);

  // Clause j as two masks over bit (n - var): positive and negative literals.
  // Bit n-1 is x1, so counting upward walks assignments in lex order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  masks.reserve(f.n_clauses());
  for (const auto& clause : f.clauses()) {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
    for (int lit : clause) {
      const auto bit = std::uint32_t{1} << (n - static_cast<std::size_t>(std::abs(lit)));
      (lit > 0 ? pos : neg) |= bit;
    }
    masks.emplace_back(pos, neg);
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto bits = static_cast<std::uint32_t>(m);
    bool ok = true;
    for (auto [pos, neg] : masks) {
      if ((bits & pos) == 0 && (~bits & neg) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Assignment a;
    a.values.resize(n);
    for (std::size_t v = 1; v <= n; ++v) a.values[v - 1] = (bits >> (n - v)) & 1U;
    return a;
  }
  return std::nullopt;
}

namespace {

struct IsSearch {
  std::size_t n;
  std::vector<std::uint32_t> neighbours;
  std::uint32_t best = 0;
  std::size_t best_size = 0;
  bool have_best = false;

  // Include-first recursion in vertex order visits candidate sets in
  // lexicographic order, so keeping only strict improvements yields the
  // lexicographically first maximum set.
  void run(std::size_t v, std::uint32_t chosen, std::size_t size, std::uint32_t allowed) {
    const std::size_t remaining = static_cast<std::size_t>(std::popcount(allowed >> v));
    if (have_best && size + remaining <= best_size) return;
    if (v == n) {
      best = chosen;
      best_size = size;
      have_best = true;
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << v;
    if (allowed & bit) run(v + 1, chosen | bit, size + 1, allowed & ~neighbours[v]);
    run(v + 1, chosen, size, allowed & ~bit);
  }
};

bool color_from(const Graph& g, std::size_t v, std::size_t k, std::size_t used,
                std::vector<std::size_t>& colors) {
  if (v == g.n_vertices()) return true;
  const std::size_t limit = std::min(k, used + 1);
  for (std::size_t c = 0; c < limit; ++c) {
    bool clash = false;
    for (std::size_t u = 0; u < v && !clash; ++u) {
      clash = colors[u] == c && g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (clash) continue;
    colors[v] = c;
    if (color_from(g, v + 1, k, std::max(used, c + 1), colors)) return true;
  }
  return false;
}

}  // namespace

IndependentSet max_independent_set_brute(const Graph& g) {
  const std::size_t n = g.n_vertices();
  if (n > kMaxBruteIsVertices) throw ResourceError("is_vertices", kMaxBruteIsVertices);
  IsSearch search{n, std::vector<std::uint32_t>(n, 0)};
  for (auto [u, v] : g.edges()) {
    search.neighbours[u] |= std::uint32_t{1} << v;
    search.neighbours[v] |= std::uint32_t{1} << u;
  }
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  search.run(0, 0, 0, all);

  IndependentSet out;
  out.alpha = search.best_size;
  for (Vertex v = 0; v < n; ++v) {
    if ((search.best >> v) & 1U) out.vertices.push_back(v);
  }
  return out;
}

Coloring chromatic_number_brute(const Graph& g) {
  const std::size_t n = g.n_vertices();
  if (n > kMaxBruteColorVertices) throw ResourceError("color_vertices", kMaxBruteColorVertices);
  Coloring out;
  if (n == 0) return out;
  std::vector<std::size_t> colors(n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    if (color_from(g, 0, k, 0, colors)) {
      out.chi = k;
      out.colors = colors;
      return out;
    }
  }
  throw Error("chromatic_number_brute: no coloring found");  // unreachable: n colors always suffice
}

bool is_independent(const Graph& g, const std::vector<Vertex>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors) {
  if (colors.size() != g.n_vertices()) return false;
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

}  // namespace wasync
