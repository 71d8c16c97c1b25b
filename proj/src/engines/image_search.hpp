#pragma once

// Breadth-first search over distinct state sets reachable from a start set.
// Letters are expanded in index order and nodes are dequeued FIFO, so the
// first time a node is discovered its path is the length-then-lexicographic
// minimal word reaching it.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wasync/core/automaton.hpp"
#include "wasync/core/error.hpp"

namespace wasync::detail {

class ImageSearch {
 public:
  static constexpr std::uint32_t kRoot = UINT32_MAX;

  /// `step(set, letter)` returns the successor set or nullopt if the letter is
  /// not applicable. `visit(node, set)` is called once per discovered node in
  /// discovery order (start first); returning true stops the search there.
  template <class Step, class Visit>
  std::optional<std::uint32_t> run(StateSet start, std::size_t n_letters, Step&& step,
                                   Visit&& visit, std::size_t budget) {
    nodes_.clear();
    parent_.clear();
    via_.clear();
    index_.clear();
    if (add(std::move(start), kRoot, 0, budget) && visit(0U, nodes_[0])) return 0U;
    for (std::uint32_t head = 0; head < nodes_.size(); ++head) {
      for (Letter a = 0; a < n_letters; ++a) {
        std::optional<StateSet> next = step(nodes_[head], a);
        if (!next) continue;
        if (index_.find(*next) != index_.end()) continue;
        add(std::move(*next), head, a, budget);
        const auto id = static_cast<std::uint32_t>(nodes_.size() - 1);
        if (visit(id, nodes_[id])) return id;
      }
    }
    return std::nullopt;
  }

  Word word_to(std::uint32_t node) const {
    std::vector<Letter> letters;
    while (parent_[node] != kRoot) {
      letters.push_back(via_[node]);
      node = parent_[node];
    }
    return Word(std::vector<Letter>(letters.rbegin(), letters.rend()));
  }

  const StateSet& set(std::uint32_t node) const { return nodes_[node]; }
  std::size_t explored() const noexcept { return nodes_.size(); }

 private:
  bool add(StateSet s, std::uint32_t parent, Letter via, std::size_t budget) {
    if (nodes_.size() >= budget) throw ResourceError("visited_budget", budget);
    index_.emplace(s, static_cast<std::uint32_t>(nodes_.size()));
    nodes_.push_back(std::move(s));
    parent_.push_back(parent);
    via_.push_back(via);
    return true;
  }

  std::vector<StateSet> nodes_;
  std::vector<std::uint32_t> parent_;
  std::vector<Letter> via_;
  std::unordered_map<StateSet, std::uint32_t> index_;
};

/// Successor function over a complete automaton.
inline auto complete_step(const Dfa& a) {
  return [&a](const StateSet& s, Letter x) -> std::optional<StateSet> {
    StateSet out(a.n_states());
    s.for_each([&](State q) { out.insert(a.next(q, x)); });
    return out;
  };
}

}  // namespace wasync::detail
