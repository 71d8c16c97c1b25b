#include "naive.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace naive {

Table from(const wasync::TransitionTable& t) {
  Table out;
  out.n = static_cast<int>(t.n_states());
  out.k = static_cast<int>(t.n_letters());
  out.delta.assign(out.n, std::vector<int>(out.k, -1));
  for (int q = 0; q < out.n; ++q)
    for (int a = 0; a < out.k; ++a) {
      const auto v = t.at(static_cast<wasync::State>(q), static_cast<wasync::Letter>(a));
      if (v != wasync::kUndefined) out.delta[q][a] = static_cast<int>(v);
    }
  return out;
}

Set all(const Table& t) {
  Set s;
  for (int q = 0; q < t.n; ++q) s.insert(q);
  return s;
}

Set to_set(const wasync::StateSet& s) {
  Set out;
  for (auto q : s.members()) out.insert(static_cast<int>(q));
  return out;
}

Letters to_letters(const wasync::Word& w) { return Letters(w.letters.begin(), w.letters.end()); }

namespace {

std::optional<Set> step(const Table& t, const Set& s, int a) {
  Set out;
  for (int q : s) {
    const int r = t.delta[q][a];
    if (r < 0) return std::nullopt;
    out.insert(r);
  }
  return out;
}

// BFS from `start`; visit(set, word) returns true to stop.
template <class Visit>
void bfs(const Table& t, const Set& start, Visit visit) {
  std::map<Set, Letters> seen{{start, {}}};
  std::deque<Set> queue{start};
  if (visit(start, Letters{})) return;
  while (!queue.empty()) {
    const Set cur = queue.front();
    queue.pop_front();
    const Letters word = seen[cur];
    for (int a = 0; a < t.k; ++a) {
      auto next = step(t, cur, a);
      if (!next || seen.count(*next)) continue;
      Letters w = word;
      w.push_back(a);
      seen.emplace(*next, w);
      if (visit(*next, w)) return;
      queue.push_back(*next);
    }
  }
}

}  // namespace

std::optional<Set> image(const Table& t, const Set& s, const Letters& w) {
  Set cur = s;
  for (int a : w) {
    auto next = step(t, cur, a);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

std::optional<Letters> shortest_sync(const Table& t, const Set& s) {
  std::optional<Letters> found;
  bfs(t, s, [&](const Set& img, const Letters& w) {
    if (img.size() == 1) found = w;
    return found.has_value();
  });
  return found;
}

std::size_t rank(const Table& t, const Set& s) {
  std::size_t best = s.size();
  bfs(t, s, [&](const Set& img, const Letters&) {
    best = std::min(best, img.size());
    return false;
  });
  return best;
}

bool reachable(const Table& t, const Set& target) {
  bool hit = false;
  bfs(t, all(t), [&](const Set& img, const Letters&) {
    hit = img == target;
    return hit;
  });
  return hit;
}

std::set<std::vector<int>> monoid(const Table& t) {
  std::vector<int> id(t.n);
  for (int q = 0; q < t.n; ++q) id[q] = q;
  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (int a = 0; a < t.k; ++a) {
      std::vector<int> next(t.n);
      for (int q = 0; q < t.n; ++q) next[q] = t.delta[cur[q]][a];
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

std::size_t max_sync_size(const Table& t) {
  std::size_t best = 1;
  for (const auto& f : monoid(t)) {
    std::map<int, std::size_t> fiber;
    for (int v : f) best = std::max(best, ++fiber[v]);
  }
  return best;
}

std::optional<Letters> intersection(const std::vector<Acceptor>& as) {
  std::vector<int> start;
  for (const auto& a : as) start.push_back(a.initial);
  auto accepted = [&](const std::vector<int>& tuple) {
    for (std::size_t i = 0; i < as.size(); ++i)
      if (!as[i].accepting.count(tuple[i])) return false;
    return true;
  };
  std::map<std::vector<int>, Letters> seen{{start, {}}};
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (accepted(cur)) return seen[cur];
    for (int a = 0; a < as.front().table.k; ++a) {
      std::vector<int> next(cur.size());
      for (std::size_t i = 0; i < as.size(); ++i) next[i] = as[i].table.delta[cur[i]][a];
      if (seen.count(next)) continue;
      Letters w = seen[cur];
      w.push_back(a);
      seen.emplace(next, w);
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n && !c[i][j]; ++l) c[i][j] = a[i][l] && b[l][j];
  return c;
}

bool has_proper_cycle(const Table& t) {
  std::vector<int> colour(t.n, 0);
  std::function<bool(int)> dfs = [&](int q) {
    colour[q] = 1;
    for (int a = 0; a < t.k; ++a) {
      const int r = t.delta[q][a];
      if (r < 0 || r == q) continue;
      if (colour[r] == 1) return true;
      if (colour[r] == 0 && dfs(r)) return true;
    }
    colour[q] = 2;
    return false;
  };
  for (int q = 0; q < t.n; ++q)
    if (colour[q] == 0 && dfs(q)) return true;
  return false;
}

wasync::Dfa Gen::dfa(std::size_t n, std::size_t k) {
  std::vector<wasync::State> table(n * k);
  for (auto& v : table) v = static_cast<wasync::State>(below(n));
  return wasync::Dfa(n, k, std::move(table));
}

wasync::PartialDfa Gen::partial(std::size_t n, std::size_t k, double undefined) {
  std::vector<wasync::State> table(n * k);
  for (auto& v : table) v = coin(undefined) ? wasync::kUndefined : static_cast<wasync::State>(below(n));
  return wasync::PartialDfa(n, k, std::move(table));
}

wasync::Word Gen::word(std::size_t k, std::size_t max_len) {
  wasync::Word w;
  const std::size_t len = range(0, max_len);
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<wasync::Letter>(below(k)));
  return w;
}

wasync::StateSet Gen::subset(std::size_t n) {
  wasync::StateSet s(n);
  while (s.empty())
    for (std::size_t q = 0; q < n; ++q)
      if (coin()) s.insert(static_cast<wasync::State>(q));
  return s;
}

}  // namespace naive
