#include "wasync/core/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "wasync/core/error.hpp"

namespace wasync {

TopoOrder::TopoOrder(std::vector<State> sequence)
    : sequence_(std::move(sequence)), position_(sequence_.size(), sequence_.size()) {
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    const State q = sequence_[i];
    if (q >= sequence_.size() || position_[q] != sequence_.size()) {
      throw InputError("topological order is not a permutation");
    }
    position_[q] = i;
  }
}

bool TopoOrder::respects(const TransitionTable& a) const {
  if (a.n_states() != sequence_.size()) return false;
  for (State q = 0; q < a.n_states(); ++q) {
    for (State t : a.row(q)) {
      if (t == kUndefined || t == q) continue;
      if (position_[q] >= position_[t]) return false;
    }
  }
  return true;
}

namespace {

// Successor lists without self-loops, duplicates removed.
std::vector<std::vector<State>> successors(const TransitionTable& a) {
  std::vector<std::vector<State>> succ(a.n_states());
  for (State q = 0; q < a.n_states(); ++q) {
    for (State t : a.row(q)) {
      if (t != kUndefined && t != q) succ[q].push_back(t);
    }
    std::sort(succ[q].begin(), succ[q].end());
    succ[q].erase(std::unique(succ[q].begin(), succ[q].end()), succ[q].end());
  }
  return succ;
}

std::vector<State> find_cycle(const std::vector<std::vector<State>>& succ) {
  enum class Mark { kWhite, kGrey, kBlack };
  std::vector<Mark> mark(succ.size(), Mark::kWhite);
  std::vector<State> stack;
  std::vector<State> cycle;

  std::function<bool(State)> dfs = [&](State q) {
    mark[q] = Mark::kGrey;
    stack.push_back(q);
    for (State t : succ[q]) {
      if (mark[t] == Mark::kGrey) {
        auto it = std::find(stack.begin(), stack.end(), t);
        cycle.assign(it, stack.end());
        return true;
      }
      if (mark[t] == Mark::kWhite && dfs(t)) return true;
    }
    stack.pop_back();
    mark[q] = Mark::kBlack;
    return false;
  };

  for (State q = 0; q < succ.size(); ++q) {
    if (mark[q] == Mark::kWhite && dfs(q)) break;
  }
  return cycle;
}

}  // namespace

TopoResult topological_sort(const TransitionTable& a) {
  const auto succ = successors(a);
  std::vector<std::size_t> indeg(a.n_states(), 0);
  for (const auto& out : succ) {
    for (State t : out) ++indeg[t];
  }
  std::priority_queue<State, std::vector<State>, std::greater<>> ready;
  for (State q = 0; q < a.n_states(); ++q) {
    if (indeg[q] == 0) ready.push(q);
  }
  std::vector<State> order;
  order.reserve(a.n_states());
  while (!ready.empty()) {
    const State q = ready.top();
    ready.pop();
    order.push_back(q);
    for (State t : succ[q]) {
      if (--indeg[t] == 0) ready.push(t);
    }
  }
  if (order.size() == a.n_states()) return TopoResult{TopoOrder(std::move(order)), {}};
  return TopoResult{std::nullopt, find_cycle(succ)};
}

bool is_weakly_acyclic(const TransitionTable& a) { return topological_sort(a).weakly_acyclic(); }

StateSet sink_states(const Dfa& a) {
  StateSet sinks(a.n_states());
  for (State q = 0; q < a.n_states(); ++q) {
    const auto row = a.row(q);
    if (std::all_of(row.begin(), row.end(), [q](State t) { return t == q; })) sinks.insert(q);
  }
  return sinks;
}

EulerianReport eulerian_report(const Dfa& a) {
  EulerianReport report;
  report.in_degree.assign(a.n_states(), 0);
  for (State t : a.table()) ++report.in_degree[t];
  report.eulerian = std::all_of(report.in_degree.begin(), report.in_degree.end(),
                                [&](std::size_t d) { return d == a.n_letters(); });
  return report;
}

bool is_eulerian(const Dfa& a) { return eulerian_report(a).eulerian; }

}  // namespace wasync
