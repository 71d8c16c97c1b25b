#pragma once

#include <optional>
#include <vector>

#include "wasync/core/automaton.hpp"

namespace wasync {

/// A topological sort of the non-self-loop transition digraph.
class TopoOrder {
 public:
  /// `sequence[i]` is the state placed at position i.
  explicit TopoOrder(std::vector<State> sequence);

  const std::vector<State>& sequence() const noexcept { return sequence_; }
  std::size_t position(State q) const { return position_.at(q); }
  std::size_t size() const noexcept { return sequence_.size(); }

  /// True iff every non-self-loop transition goes strictly forward.
  bool respects(const TransitionTable& a) const;

 private:
  std::vector<State> sequence_;
  std::vector<std::size_t> position_;
};

/// Outcome of topological_sort: exactly one of `order` / `cycle` is set.
/// `cycle` lists the states of one simple cycle of length >= 2, in edge order.
struct TopoResult {
  std::optional<TopoOrder> order;
  std::vector<State> cycle;

  bool weakly_acyclic() const noexcept { return order.has_value(); }
};

/// Kahn's algorithm with smallest-index-first tie-breaking. Undefined
/// entries of partial tables are ignored.
TopoResult topological_sort(const TransitionTable& a);

bool is_weakly_acyclic(const TransitionTable& a);

/// States fixed by every letter.
StateSet sink_states(const Dfa& a);

struct EulerianReport {
  bool eulerian = false;
  std::vector<std::size_t> in_degree;  ///< per state, counted over (state, letter) pairs
};

/// Eulerian iff every state has in-degree exactly n_letters.
EulerianReport eulerian_report(const Dfa& a);
bool is_eulerian(const Dfa& a);

}  // namespace wasync
