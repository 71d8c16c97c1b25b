#pragma once

#include "wasync/gadgets/bundle.hpp"

namespace wasync {

/// States q1..qn over the single letter x: q_i -> q_{i+1} for i <= n-r,
/// the last r states fixed. Rank r, reached by x^(n-r) and nothing shorter.
/// Requires 1 <= r <= n.
GadgetBundle family_tight_rank(std::size_t n, std::size_t r);

/// Binary weakly acyclic automaton on q1..q_{k-1}, s1..s_l, t (l = n-k)
/// whose subset S = {q1..q_{k-1}, s_l} needs (10^(l-1))^(k-1), of length
/// (k-1)(n-k). Requires 2 <= k < n.
GadgetBundle family_subset_binary(std::size_t n, std::size_t k);

/// States -1..n-2 over letters a1..a_{n-2}; S = {0, n-2, ..., n-k} needs a
/// word of length (k-1)(2n-k-2)/2. Requires 2 <= k < n.
GadgetBundle family_subset_large_alphabet(std::size_t n, std::size_t k);

/// Unrolls a binary p-state automaton into p+1 layers q_i^j; layer p+1 is
/// absorbing. S' (layer 1) is synchronizing iff `a` has a synchronizing word
/// of length <= p, and then the shortest lengths agree.
GadgetBundle gadget_layered_subset(const Dfa& a);

}  // namespace wasync
