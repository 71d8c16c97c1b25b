#pragma once

#include "wasync/gadgets/bundle.hpp"
#include "wasync/oracles/cnf.hpp"

namespace wasync {

// State names: y<i>^<j> and z<i>^<j> for clause j, s^<j>, and f.
// Canonical order is clause-major: y_1^j, [s^j], y_2^j, z_2^j, ..., with f
// last. Letters are 0, 1 and then r.

/// Binary weakly acyclic automaton with m(n+1)+1 states; S = {y_1^j} is
/// synchronizing iff the formula is satisfiable ("sat").
GadgetBundle gadget_sat_subset_sync(const CnfFormula& f);

/// One acceptor per clause: states y_1^j..y_{n+1}^j and f, initial y_1^j,
/// accepting {f}. A common accepted word exists iff satisfiable.
IntersectionGadget gadget_sat_intersection(const CnfFormula& f);

/// Partial binary automaton: satisfying letters divert y_i^j onto the
/// z-track, y_{n+1}^j is undefined on both letters.
GadgetBundle build_a_base(const CnfFormula& f);

/// A_base plus s^j and the letter r, which sends every s, y, z state of
/// clause j to y_1^j and fixes f. Carefully synchronizing iff satisfiable.
GadgetBundle gadget_sat_careful(const CnfFormula& f);

/// A_base completed by y_{n+1}^j -> f. The target {z_{n+1}^j} + {f} is
/// reachable as an exact image of Q iff satisfiable.
GadgetBundle gadget_sat_reachability(const CnfFormula& f);

/// Transition matrices of 0, 1, r in the careful gadget plus "spread"
/// (row f all ones). 0 and 1 are upper-triangular, r and spread lower.
MatrixGadget gadget_sat_matrices(const CnfFormula& f);

/// w_1..w_n with w_i = value of x_i.
Word assignment_word(const Assignment& a);
/// r w_1..w_n 0 over the careful gadget's alphabet.
Word careful_witness_word(const Assignment& a);

}  // namespace wasync
