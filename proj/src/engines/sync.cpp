#include "wasync/engines/sync.hpp"

#include <deque>
#include <unordered_map>

#include "image_search.hpp"
#include "wasync/core/error.hpp"

namespace wasync {

namespace {

constexpr std::uint32_t kUnreached = UINT32_MAX;

void check_whole_set_cap(std::size_t n, const SearchLimits& limits) {
  if (n > limits.state_cap) throw ResourceError("state_cap", limits.state_cap);
}

struct TupleHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (State q : v) h = (h ^ q) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace

// Pair nodes are {p, q} with p <= q; index packs the upper triangle.
std::size_t PairMerger::index(State p, State q) const {
  if (p > q) std::swap(p, q);
  return static_cast<std::size_t>(q) * (q + 1) / 2 + p;
}

PairMerger::PairMerger(const Dfa& a) : dfa_(&a), n_(a.n_states()) {
  const std::size_t nodes = n_ * (n_ + 1) / 2;
  dist_.assign(nodes, kUnreached);
  letter_.assign(nodes, 0);
  next_.assign(nodes, kUnreached);

  // preimage[a][t] = states mapped to t by letter a
  std::vector<std::vector<std::vector<State>>> preimage(
      a.n_letters(), std::vector<std::vector<State>>(n_));
  for (State q = 0; q < n_; ++q) {
    for (Letter x = 0; x < a.n_letters(); ++x) preimage[x][a.next(q, x)].push_back(q);
  }

  std::deque<std::pair<State, State>> queue;
  for (State q = 0; q < n_; ++q) {
    dist_[index(q, q)] = 0;
    queue.emplace_back(q, q);
  }
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    const std::size_t here = index(x, y);
    for (Letter c = 0; c < a.n_letters(); ++c) {
      for (State p : preimage[c][x]) {
        for (State q : preimage[c][y]) {
          if (p == q) continue;
          const std::size_t there = index(p, q);
          if (dist_[there] != kUnreached) continue;
          dist_[there] = dist_[here] + 1;
          letter_[there] = c;
          next_[there] = static_cast<std::uint32_t>(here);
          queue.emplace_back(std::min(p, q), std::max(p, q));
        }
      }
    }
  }
  for (auto d : dist_) reached_ += d != kUnreached;
}

bool PairMerger::mergeable(State p, State q) const {
  dfa_->check_state(p);
  dfa_->check_state(q);
  return dist_[index(p, q)] != kUnreached;
}

Word PairMerger::merge_word(State p, State q) const {
  if (!mergeable(p, q)) throw InputError("pair is not mergeable");
  Word w;
  std::size_t node = index(p, q);
  while (dist_[node] != 0) {
    w.push_back(letter_[node]);
    node = next_[node];
  }
  return w;
}

SyncResult is_synchronizing(const Dfa& a) {
  PairMerger merger(a);
  SyncResult result;
  result.explored = merger.reached();
  if (!merger.all_mergeable()) return result;

  StateSet current = StateSet::full(a.n_states());
  Word witness;
  while (current.size() > 1) {
    const auto members = current.members();
    const Word w = merger.merge_word(members[0], members[1]);
    current = image(a, current, w);
    witness += w;
  }
  result.synchronizing = true;
  result.target = current.first();
  result.witness = std::move(witness);
  return result;
}

namespace {

SyncResult singleton_search(const Dfa& a, StateSet start, const SearchLimits& limits) {
  detail::ImageSearch search;
  const auto hit = search.run(
      std::move(start), a.n_letters(), detail::complete_step(a),
      [](std::uint32_t, const StateSet& s) { return s.size() == 1; }, limits.visited_budget);
  SyncResult result;
  result.explored = search.explored();
  if (hit) {
    result.synchronizing = true;
    result.witness = search.word_to(*hit);
    result.target = search.set(*hit).first();
  }
  return result;
}

}  // namespace

SyncResult shortest_sync_word(const Dfa& a, const SearchLimits& limits) {
  check_whole_set_cap(a.n_states(), limits);
  return singleton_search(a, StateSet::full(a.n_states()), limits);
}

SyncResult subset_shortest_sync_word(const Dfa& a, const StateSet& s, const SearchLimits& limits) {
  if (s.universe_size() != a.n_states()) throw InputError("state set universe does not match automaton");
  if (s.empty()) throw InputError("subset must be nonempty");
  return singleton_search(a, s, limits);
}

SyncResult careful_shortest_word(const PartialDfa& a, const SearchLimits& limits) {
  check_whole_set_cap(a.n_states(), limits);
  detail::ImageSearch search;
  const auto hit = search.run(
      StateSet::full(a.n_states()), a.n_letters(),
      [&a](const StateSet& s, Letter x) { return partial_step(a, s, x); },
      [](std::uint32_t, const StateSet& s) { return s.size() == 1; }, limits.visited_budget);
  SyncResult result;
  result.explored = search.explored();
  if (hit) {
    result.synchronizing = true;
    result.witness = search.word_to(*hit);
    result.target = search.set(*hit).first();
  }
  return result;
}

ReachResult is_subset_reachable(const Dfa& a, const StateSet& target, const SearchLimits& limits) {
  if (target.universe_size() != a.n_states()) {
    throw InputError("state set universe does not match automaton");
  }
  check_whole_set_cap(a.n_states(), limits);
  detail::ImageSearch search;
  const auto hit = search.run(
      StateSet::full(a.n_states()), a.n_letters(), detail::complete_step(a),
      [&target](std::uint32_t, const StateSet& s) { return s == target; }, limits.visited_budget);
  ReachResult result;
  result.explored = search.explored();
  if (hit) {
    result.reachable = true;
    result.witness = search.word_to(*hit);
  }
  return result;
}

IntersectionResult intersection_nonempty(std::span<const Acceptor> acceptors,
                                         const SearchLimits& limits) {
  if (acceptors.empty()) throw InputError("intersection needs at least one acceptor");
  const std::size_t k = acceptors.front().automaton.n_letters();
  for (const auto& acc : acceptors) {
    if (acc.automaton.n_letters() != k) throw InputError("acceptors have different alphabets");
    acc.automaton.check_state(acc.initial);
    if (acc.accepting.universe_size() != acc.automaton.n_states()) {
      throw InputError("accepting set universe does not match acceptor");
    }
  }
  auto accepted = [&](const std::vector<State>& tuple) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (!acceptors[i].accepting.contains(tuple[i])) return false;
    }
    return true;
  };

  std::vector<std::vector<State>> nodes;
  std::vector<std::uint32_t> parent;
  std::vector<Letter> via;
  std::unordered_map<std::vector<State>, std::uint32_t, TupleHash> seen;

  auto word_to = [&](std::uint32_t node) {
    std::vector<Letter> letters;
    while (parent[node] != kUnreached) {
      letters.push_back(via[node]);
      node = parent[node];
    }
    return Word(std::vector<Letter>(letters.rbegin(), letters.rend()));
  };

  std::vector<State> start;
  for (const auto& acc : acceptors) start.push_back(acc.initial);
  nodes.push_back(start);
  parent.push_back(kUnreached);
  via.push_back(0);
  seen.emplace(start, 0);

  IntersectionResult result;
  if (accepted(start)) {
    result.nonempty = true;
    result.witness = Word{};
    result.explored = 1;
    return result;
  }
  for (std::uint32_t head = 0; head < nodes.size(); ++head) {
    for (Letter x = 0; x < k; ++x) {
      std::vector<State> next(acceptors.size());
      for (std::size_t i = 0; i < acceptors.size(); ++i) {
        next[i] = acceptors[i].automaton.next(nodes[head][i], x);
      }
      if (seen.count(next) != 0) continue;
      if (nodes.size() >= limits.visited_budget) {
        throw ResourceError("visited_budget", limits.visited_budget);
      }
      const auto id = static_cast<std::uint32_t>(nodes.size());
      seen.emplace(next, id);
      nodes.push_back(std::move(next));
      parent.push_back(head);
      via.push_back(x);
      if (accepted(nodes.back())) {
        result.nonempty = true;
        result.witness = word_to(id);
        result.explored = nodes.size();
        return result;
      }
    }
  }
  result.explored = nodes.size();
  return result;
}

}  // namespace wasync
