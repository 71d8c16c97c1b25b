#include "wasync/gadgets/maxsync_gadgets.hpp"

#include <algorithm>
#include <string>

#include "builder.hpp"
#include "wasync/core/dfa_io.hpp"
#include "wasync/core/error.hpp"
#include "wasync/oracles/brute.hpp"
#include "wasync/oracles/dimacs.hpp"

namespace wasync {

namespace {

std::string num(std::size_t i) { return std::to_string(i); }

std::string v_name(std::size_t i, std::size_t j) { return "v" + num(j) + "^" + num(i); }
std::string u_name(std::size_t i, std::size_t j) { return "u" + num(j) + "^" + num(i); }
std::string copy_suffix(std::size_t c) { return "#" + num(c); }

// Layers 1..p of the binary main gadget, with layer 1 repeated `copies`
// times. Layer i+1 of v_j is f once i = p.
void build_main(detail::TableBuilder& b, const Graph& g, std::size_t copies) {
  const std::size_t p = g.n_vertices();
  for (std::size_t c = 1; c <= copies; ++c) {
    for (std::size_t j = 1; j <= p; ++j) {
      b.add(v_name(1, j) + copy_suffix(c));
      b.add(u_name(1, j) + copy_suffix(c));
    }
  }
  for (std::size_t i = 2; i <= p; ++i) {
    for (std::size_t j = 1; j <= p; ++j) {
      b.add(v_name(i, j));
      b.add(u_name(i, j));
    }
  }
  b.add("f");

  auto next_v = [&](std::size_t i, std::size_t j) { return i == p ? std::string("f") : v_name(i + 1, j); };
  auto wire = [&](std::size_t i, std::size_t j, const std::string& v, const std::string& u) {
    const bool edge = i != j && g.adjacent(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
    b.set(v, 0, i == j ? u : next_v(i, j));
    b.set(v, 1, edge ? u : next_v(i, j));
  };
  for (std::size_t c = 1; c <= copies; ++c) {
    for (std::size_t j = 1; j <= p; ++j) wire(1, j, v_name(1, j) + copy_suffix(c), u_name(1, j) + copy_suffix(c));
  }
  for (std::size_t i = 2; i <= p; ++i) {
    for (std::size_t j = 1; j <= p; ++j) wire(i, j, v_name(i, j), u_name(i, j));
  }
}

nlohmann::json graph_params(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"p", g.n_vertices()}, {"edges", edges}};
}

}  // namespace

GadgetBundle gadget_maxsync_padding(const Dfa& a, const StateSet& s) {
  const std::size_t n = a.n_states();
  if (s.universe_size() != n) throw InputError("subset universe does not match automaton");
  std::vector<std::string> letters;
  for (Letter x = 0; x < a.n_letters(); ++x) letters.push_back(a.letter_name(x));
  detail::TableBuilder b(letters);
  for (State q = 0; q < n; ++q) b.add(a.state_name(q));
  for (State q = 0; q < n; ++q) {
    for (Letter x = 0; x < a.n_letters(); ++x) b.set(q, x, a.at(q, x));
  }
  std::vector<State> fresh;
  for (State q : s.members()) {
    for (std::size_t t = 1; t <= n + 1; ++t) {
      const State id = b.add(a.state_name(q) + "'" + num(t));
      b.set_all(id, q);
      fresh.push_back(id);
    }
  }

  StateSet s_prime(b.size());
  for (State q : fresh) s_prime.insert(q);
  const auto c = static_cast<std::int64_t>((n + 1) * s.size());

  nlohmann::json params{{"n", n}, {"subset", s.members()}};
  GadgetBundle out{b.complete()};
  out.subset = s_prime;
  out.threshold = c;
  out.expected = {{"threshold", c}};
  out.source = make_provenance("maxsync-padding", params, serialize_dfa(a));
  return out;
}

GadgetBundle gadget_is_maxsync_large_alphabet(const Graph& g) {
  const std::size_t p = g.n_vertices();
  std::vector<std::string> letters;
  for (std::size_t i = 1; i <= p; ++i) letters.push_back("v~" + num(i));
  detail::TableBuilder b(letters);
  for (std::size_t i = 1; i <= p; ++i) b.add("s" + num(i));
  for (std::size_t i = 1; i <= p; ++i) b.add("t" + num(i));
  const State f = b.add("f");

  for (std::size_t i = 1; i <= p; ++i) b.set(b.id("s" + num(i)), static_cast<Letter>(i - 1), f);
  for (auto [u, v] : g.edges()) {
    const std::size_t i = u + 1;
    const std::size_t j = v + 1;
    b.set("s" + num(i), static_cast<Letter>(j - 1), "t" + num(i));
    b.set("s" + num(j), static_cast<Letter>(i - 1), "t" + num(j));
  }

  const auto alpha = max_independent_set_brute(g).alpha;
  GadgetBundle out{b.complete()};
  out.expected = {{"alpha", static_cast<std::int64_t>(alpha)},
                  {"alpha_plus_1", static_cast<std::int64_t>(alpha + 1)}};
  out.source = make_provenance("is-maxsync-large", graph_params(g), serialize_dimacs_graph(g));
  return out;
}

GadgetBundle gadget_is_maxsync_binary(const Graph& g) {
  const std::size_t p = g.n_vertices();
  if (p == 0) throw InputError("gadget_is_maxsync_binary requires at least one vertex");
  detail::TableBuilder b({"0", "1"});
  build_main(b, g, p);
  for (std::size_t i = 2; i <= p; ++i) b.add("c" + num(i));
  auto cycle = [](std::size_t i) { return i == 1 ? std::string("f") : "c" + num(i); };
  for (std::size_t i = 1; i <= p; ++i) {
    const State from = b.id(cycle(i));
    b.set_all(from, b.id(cycle(i == p ? 1 : i + 1)));
  }

  const auto alpha = max_independent_set_brute(g).alpha;
  GadgetBundle out{b.complete()};
  out.expected = {{"alpha", static_cast<std::int64_t>(alpha)}};
  if (alpha > 1) out.expected["p_alpha_plus_1"] = static_cast<std::int64_t>(p * alpha + 1);
  out.source = make_provenance("is-maxsync-binary", graph_params(g), serialize_dimacs_graph(g));
  return out;
}

GadgetBundle gadget_is_maxsync_binary_wa(const Graph& g) {
  const std::size_t p = g.n_vertices();
  if (p == 0) throw InputError("gadget_is_maxsync_binary_wa requires at least one vertex");
  detail::TableBuilder b({"0", "1"});
  build_main(b, g, p * p);

  const auto alpha = static_cast<std::int64_t>(max_independent_set_brute(g).alpha);
  const auto pp = static_cast<std::int64_t>(p * p);
  GadgetBundle out{b.complete()};
  out.expected = {{"alpha", alpha},
                  {"lower", pp * alpha},
                  {"upper", pp * alpha + static_cast<std::int64_t>(p * (p - 1)) + 1},
                  {"witness_size", pp * alpha + 1}};
  out.source = make_provenance("is-maxsync-binary-wa", graph_params(g), serialize_dimacs_graph(g));
  return out;
}

StateSet is_gadget_witness_set(const GadgetBundle& bundle, const std::vector<Vertex>& vertices) {
  const auto& t = bundle.table();
  StateSet out(t.n_states());
  for (State q = 0; q < t.n_states(); ++q) {
    const std::string name = t.state_name(q);
    if (name == "f") {
      out.insert(q);
      continue;
    }
    for (Vertex v : vertices) {
      const std::string prefix = v_name(1, v + 1) + "#";
      if (name.starts_with(prefix)) out.insert(q);
    }
  }
  return out;
}

Word is_gadget_witness_word(std::size_t p, const std::vector<Vertex>& vertices) {
  Word w;
  for (Vertex i = 0; i < p; ++i) {
    const bool in = std::find(vertices.begin(), vertices.end(), i) != vertices.end();
    w.letters.push_back(in ? 1 : 0);
  }
  return w;
}

}  // namespace wasync
