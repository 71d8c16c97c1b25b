#pragma once

#include "wasync/gadgets/bundle.hpp"
#include "wasync/oracles/graph.hpp"

namespace wasync {

/// Copy of `a` plus n+1 fresh states per s in `s`, each sent to s by every
/// letter. S' = the fresh states, threshold c = (n+1)|s|. A synchronizing
/// set of size >= c exists iff `s` is synchronizing in `a`.
GadgetBundle gadget_maxsync_padding(const Dfa& a, const StateSet& s);

/// States s1..sp, t1..tp, f over letters v~1..v~p. Maximum synchronizing
/// set has size alpha(G)+1. Weakly acyclic.
GadgetBundle gadget_is_maxsync_large_alphabet(const Graph& g);

/// Binary main gadget with p layers, a p-cycle through f and the first
/// layer replicated p times: 4p^2 - p states. When alpha(G) > 1 the
/// maximum synchronizing set has size p*alpha(G)+1 ("p_alpha_plus_1").
GadgetBundle gadget_is_maxsync_binary(const Graph& g);

/// Main gadget without the cycle (f absorbing) and the first layer
/// replicated p^2 times: weakly acyclic, 2p^3 + 2p^2 - 2p + 1 states.
/// Maximum synchronizing set lies in [p^2 alpha, p^2 alpha + p(p-1) + 1].
GadgetBundle gadget_is_maxsync_binary_wa(const Graph& g);

/// The first-layer copies of v_j^(1) for j in `vertices`, plus f: the set
/// the independent-set word synchronizes in either binary gadget.
StateSet is_gadget_witness_set(const GadgetBundle& bundle, const std::vector<Vertex>& vertices);

/// Word w of length p with w_i = 1 iff v_i is in `vertices`.
Word is_gadget_witness_word(std::size_t p, const std::vector<Vertex>& vertices);

}  // namespace wasync
