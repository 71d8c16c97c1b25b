#include "wasync/gadgets/rank_gadgets.hpp"

#include <string>

#include "builder.hpp"
#include "wasync/core/error.hpp"
#include "wasync/oracles/brute.hpp"
#include "wasync/oracles/dimacs.hpp"

namespace wasync {

namespace {

std::string num(std::size_t i) { return std::to_string(i); }

nlohmann::json graph_params(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"p", g.n_vertices()}, {"edges", edges}};
}

bool adjacent(const Graph& g, std::size_t i, std::size_t j) {
  return i != j && g.adjacent(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
}

}  // namespace

GadgetBundle gadget_chromatic_rank(const Graph& g) {
  const std::size_t p = g.n_vertices();
  if (p == 0) throw InputError("gadget_chromatic_rank requires at least one vertex");
  std::vector<std::string> letters;
  for (std::size_t i = 1; i <= p; ++i) letters.push_back("v~" + num(i));
  letters.push_back("nu");
  const auto nu = static_cast<Letter>(p);
  detail::TableBuilder b(letters);

  auto s = [](std::size_t i, std::size_t k) { return "s" + num(i) + "^" + num(k); };
  auto t = [](std::size_t i, std::size_t k) { return "t" + num(i) + "^" + num(k); };
  auto f = [](std::size_t k) { return "f^" + num(k); };
  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t i = 1; i <= p; ++i) b.add(s(i, k));
    for (std::size_t i = 1; i <= p; ++i) b.add(t(i, k));
    b.add(f(k));
  }

  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t i = 1; i <= p; ++i) {
      b.set(s(i, k), static_cast<Letter>(i - 1), f(k));
      for (std::size_t j = 1; j <= p; ++j) {
        if (adjacent(g, i, j)) b.set(s(i, k), static_cast<Letter>(j - 1), t(i, k));
      }
      if (k < p) {
        b.set(s(i, k), nu, s(i, k + 1));
        b.set(t(i, k), nu, s(i, k + 1));
      }
    }
  }

  StateSet subset(b.size());
  for (std::size_t i = 1; i <= p; ++i) subset.insert(b.id(s(i, 1)));

  const auto chi = chromatic_number_brute(g).chi;
  GadgetBundle out{b.complete()};
  out.subset = subset;
  out.expected = {{"chi", static_cast<std::int64_t>(chi)}};
  out.source = make_provenance("chromatic-rank", graph_params(g), serialize_dimacs_graph(g));
  return out;
}

GadgetBundle gadget_chromatic_rank_binary(const Graph& g) {
  const std::size_t p = g.n_vertices();
  if (p == 0) throw InputError("gadget_chromatic_rank_binary requires at least one vertex");
  detail::TableBuilder b({"0", "1"});

  auto v = [](std::size_t i, std::size_t j, std::size_t k) { return "v" + num(i) + "," + num(j) + "^" + num(k); };
  auto u = [](std::size_t i, std::size_t j, std::size_t k) { return "u" + num(i) + "," + num(j) + "^" + num(k); };
  auto f = [](std::size_t k) { return "f^" + num(k); };
  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t i = 1; i <= p; ++i) {
      for (std::size_t j = 1; j <= p; ++j) b.add(v(i, j, k));
    }
    b.add(f(k));
    for (std::size_t i = 1; i <= p; ++i) {
      for (std::size_t j = 1; j <= p; ++j) b.add(u(i, j, k));
    }
  }

  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t i = 1; i <= p; ++i) {
      for (std::size_t j = 1; j <= p; ++j) {
        const std::string next = i == p ? f(k) : v(i + 1, j, k);
        b.set(v(i, j, k), 0, i == j ? u(i, j, k) : next);
        b.set(v(i, j, k), 1, adjacent(g, i, j) ? u(i, j, k) : next);
        if (k == p) continue;  // u^(p) states are sinks
        const std::string wait = i == p ? v(1, j, k + 1) : u(i + 1, j, k);
        b.set_all(b.id(u(i, j, k)), b.id(wait));
      }
    }
  }

  StateSet subset(b.size());
  for (std::size_t j = 1; j <= p; ++j) subset.insert(b.id(v(1, j, 1)));

  const auto chi = chromatic_number_brute(g).chi;
  GadgetBundle out{b.complete()};
  out.subset = subset;
  out.expected = {{"chi", static_cast<std::int64_t>(chi)}};
  out.source = make_provenance("chromatic-rank-binary", graph_params(g), serialize_dimacs_graph(g));
  return out;
}

}  // namespace wasync
