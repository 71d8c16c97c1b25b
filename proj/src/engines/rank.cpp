#include "wasync/engines/rank.hpp"

#include "image_search.hpp"
#include "wasync/core/error.hpp"

namespace wasync {

RankResult greedy_rank_word_wa(const Dfa& a, const TopoOrder& order) {
  if (!order.respects(a)) throw InputError("order is not a topological sort of the automaton");
  const StateSet sinks = sink_states(a);
  StateSet current = StateSet::full(a.n_states());
  Word witness;
  for (;;) {
    // earliest non-sink state of the running image
    std::optional<State> pick;
    for (State q : order.sequence()) {
      if (current.contains(q) && !sinks.contains(q)) {
        pick = q;
        break;
      }
    }
    if (!pick) break;
    Letter move = 0;
    while (a.next(*pick, move) == *pick) ++move;
    current = image(a, current, move);
    witness.push_back(move);
  }
  RankResult result;
  result.rank = current.size();
  result.witness = std::move(witness);
  result.final_image = std::move(current);
  return result;
}

RankResult greedy_rank_word_wa(const Dfa& a) {
  auto topo = topological_sort(a);
  if (!topo.order) throw InputError("automaton is not weakly acyclic");
  return greedy_rank_word_wa(a, *topo.order);
}

namespace {

RankResult min_image_search(const Dfa& a, StateSet start, const SearchLimits& limits) {
  detail::ImageSearch search;
  std::uint32_t best = 0;
  std::size_t best_size = start.size();
  search.run(
      std::move(start), a.n_letters(), detail::complete_step(a),
      [&](std::uint32_t id, const StateSet& s) {
        if (s.size() < best_size) {
          best_size = s.size();
          best = id;
        }
        return best_size == 1;
      },
      limits.visited_budget);
  RankResult result;
  result.rank = best_size;
  result.witness = search.word_to(best);
  result.final_image = search.set(best);
  result.explored = search.explored();
  return result;
}

}  // namespace

RankResult rank_of_automaton(const Dfa& a, RankMode mode, const SearchLimits& limits) {
  if (mode == RankMode::kAuto) {
    auto topo = topological_sort(a);
    if (topo.order) return greedy_rank_word_wa(a, *topo.order);
  }
  if (a.n_states() > limits.state_cap) throw ResourceError("state_cap", limits.state_cap);
  return min_image_search(a, StateSet::full(a.n_states()), limits);
}

RankResult rank_of_subset(const Dfa& a, const StateSet& s, const SearchLimits& limits) {
  if (s.universe_size() != a.n_states()) throw InputError("state set universe does not match automaton");
  if (s.empty()) throw InputError("subset must be nonempty");
  return min_image_search(a, s, limits);
}

}  // namespace wasync
