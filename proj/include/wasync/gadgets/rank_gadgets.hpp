#pragma once

#include "wasync/gadgets/bundle.hpp"
#include "wasync/oracles/graph.hpp"

namespace wasync {

/// p synchronizing gadgets T^(k) = {s_i^k, t_i^k, f^k} over v~1..v~p plus
/// the switching letter nu. S = the s-states of T^(1); rank(S) = chi(G).
/// p(2p+1) states, weakly acyclic.
GadgetBundle gadget_chromatic_rank(const Graph& g);

/// Binary version: synchronizing gadgets T^(k) (states v_{i,j}^k and f^k)
/// and waiting gadgets R^(k) (states u_{i,j}^k). S = {v_{1,j}^1};
/// rank(S) = chi(G). p(2p^2+1) states, weakly acyclic.
GadgetBundle gadget_chromatic_rank_binary(const Graph& g);

}  // namespace wasync
