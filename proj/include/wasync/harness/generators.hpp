#pragma once

#include <cstdint>
#include <random>

#include "wasync/core/automaton.hpp"
#include "wasync/oracles/cnf.hpp"
#include "wasync/oracles/graph.hpp"

namespace wasync {

// Every generator is a pure function of its arguments: one mt19937_64
// stream per call, seeded with `seed`.

/// Samples a random topological order, then sends each (state, letter) to
/// a uniform target at the same or a later position. Always weakly acyclic.
Dfa gen_random_weakly_acyclic(std::size_t n, std::size_t k, std::uint64_t seed);

/// Uniform transition table.
Dfa gen_random_dfa(std::size_t n, std::size_t k, std::uint64_t seed);

/// The n*k transition slots receive a random permutation of the multiset
/// holding each state k times, so every in-degree is k.
Dfa gen_random_eulerian(std::size_t n, std::size_t k, std::uint64_t seed);

/// gen_random_eulerian with rejection until the result is strongly
/// connected; attempt i uses a seed derived from (seed, i).
Dfa gen_random_eulerian_connected(std::size_t n, std::size_t k, std::uint64_t seed);

/// Each of the p(p-1)/2 possible edges is present with probability `density`.
Graph gen_random_graph(std::size_t p, double density, std::uint64_t seed);

/// m clauses over n variables; each clause picks `width` distinct variables
/// (clamped to n) with random signs.
CnfFormula gen_random_cnf(std::size_t n, std::size_t m, std::size_t width, std::uint64_t seed);

/// Uniform subset of {0..n-1} with exactly `size` members.
StateSet gen_random_subset(std::size_t n, std::size_t size, std::uint64_t seed);

/// Well-mixed child seed for instance `index` of a campaign seeded `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

bool is_strongly_connected(const Dfa& a);

}  // namespace wasync
