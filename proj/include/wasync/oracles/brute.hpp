#pragma once

#include <optional>
#include <vector>

#include "wasync/oracles/cnf.hpp"
#include "wasync/oracles/graph.hpp"

namespace wasync {

inline constexpr std::size_t kMaxBruteSatVars = 24;
inline constexpr std::size_t kMaxBruteIsVertices = 24;
inline constexpr std::size_t kMaxBruteColorVertices = 12;

/// Lexicographically first satisfying assignment (x1 most significant,
/// false before true), or nullopt. ResourceError above kMaxBruteSatVars.
std::optional<Assignment> sat_solve_brute(const CnfFormula& f);

struct IndependentSet {
  std::size_t alpha = 0;
  std::vector<Vertex> vertices;  ///< sorted; lexicographically first of size alpha
};

/// Exact branch and bound. ResourceError above kMaxBruteIsVertices.
IndependentSet max_independent_set_brute(const Graph& g);

struct Coloring {
  std::size_t chi = 0;
  std::vector<std::size_t> colors;  ///< colors[v] in 0..chi-1
};

/// Iterative deepening over the number of colors; the witness is the
/// lexicographically first proper coloring with colors introduced in order.
/// ResourceError above kMaxBruteColorVertices.
Coloring chromatic_number_brute(const Graph& g);

bool is_independent(const Graph& g, const std::vector<Vertex>& vertices);
bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors);

}  // namespace wasync
