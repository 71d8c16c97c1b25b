#include "wasync/gadgets/families.hpp"

#include <string>

#include "builder.hpp"
#include "wasync/core/dfa_io.hpp"
#include "wasync/core/error.hpp"

namespace wasync {

namespace {

std::string num(std::size_t i) { return std::to_string(i); }

std::string params_text(const nlohmann::json& params) { return params.dump(); }

}  // namespace

GadgetBundle family_tight_rank(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) throw InputError("family_tight_rank requires 1 <= r <= n");
  detail::TableBuilder b({"x"});
  for (std::size_t i = 1; i <= n; ++i) b.add("q" + num(i));
  for (std::size_t i = 1; i <= n - r; ++i) b.set(static_cast<State>(i - 1), 0, static_cast<State>(i));

  nlohmann::json params{{"n", n}, {"r", r}};
  GadgetBundle out{b.complete()};
  out.expected = {{"rank", static_cast<std::int64_t>(r)},
                  {"shortest_rank_word_length", static_cast<std::int64_t>(n - r)}};
  out.source = make_provenance("tight-family", params, params_text(params));
  return out;
}

GadgetBundle family_subset_binary(std::size_t n, std::size_t k) {
  if (k < 2 || k >= n) throw InputError("family_subset_binary requires 2 <= k < n");
  const std::size_t l = n - k;
  detail::TableBuilder b({"0", "1"});
  for (std::size_t i = 1; i < k; ++i) b.add("q" + num(i));
  for (std::size_t i = 1; i <= l; ++i) b.add("s" + num(i));
  b.add("t");

  for (std::size_t i = 1; i + 1 < k; ++i) b.set("q" + num(i), 1, "q" + num(i + 1));
  b.set("q" + num(k - 1), 1, "s1");
  for (std::size_t i = 1; i < l; ++i) {
    b.set("s" + num(i), 0, "s" + num(i + 1));
    b.set("s" + num(i), 1, "t");
  }

  StateSet s(n);
  for (std::size_t i = 1; i < k; ++i) s.insert(b.id("q" + num(i)));
  s.insert(b.id("s" + num(l)));

  nlohmann::json params{{"n", n}, {"k", k}};
  GadgetBundle out{b.complete()};
  out.subset = s;
  out.expected = {{"shortest_length", static_cast<std::int64_t>((k - 1) * (n - k))},
                  {"length_upper_bound", static_cast<std::int64_t>(k * (2 * n - k - 1) / 2)},
                  {"rank", 2}};
  out.source = make_provenance("family-fig1", params, params_text(params));
  return out;
}

GadgetBundle family_subset_large_alphabet(std::size_t n, std::size_t k) {
  if (k < 2 || k >= n) throw InputError("family_subset_large_alphabet requires 2 <= k < n");
  const auto top = static_cast<long long>(n) - 2;
  std::vector<std::string> letters;
  for (long long i = 1; i <= top; ++i) letters.push_back("a" + std::to_string(i));
  detail::TableBuilder b(letters);
  auto index = [](long long state) { return static_cast<State>(state + 1); };
  for (long long q = -1; q <= top; ++q) b.add("q" + std::to_string(q));

  for (long long q = -1; q <= top; ++q) {
    for (long long i = 1; i <= top; ++i) {
      long long to = q;
      if (q > 0 && q == i) to = q - 1;
      else if (q > 0 && q < i) to = -1;
      b.set(index(q), static_cast<Letter>(i - 1), index(to));
    }
  }

  StateSet s(n);
  s.insert(index(0));
  for (std::size_t d = 2; d <= k; ++d) s.insert(index(static_cast<long long>(n) - static_cast<long long>(d)));

  nlohmann::json params{{"n", n}, {"k", k}};
  GadgetBundle out{b.complete()};
  out.subset = s;
  out.expected = {{"shortest_length", static_cast<std::int64_t>((k - 1) * (2 * n - k - 2) / 2)}};
  out.source = make_provenance("family-reviewer", params, params_text(params));
  return out;
}

GadgetBundle gadget_layered_subset(const Dfa& a) {
  if (a.n_letters() != 2) throw InputError("gadget_layered_subset requires a binary automaton");
  const std::size_t p = a.n_states();
  detail::TableBuilder b({"0", "1"});
  auto name = [](std::size_t i, std::size_t j) { return "q" + num(i) + "^" + num(j); };
  for (std::size_t j = 1; j <= p + 1; ++j) {
    for (std::size_t i = 1; i <= p; ++i) b.add(name(i, j));
  }
  for (std::size_t j = 1; j <= p; ++j) {
    for (std::size_t i = 1; i <= p; ++i) {
      for (Letter x = 0; x < 2; ++x) {
        const std::size_t k = a.at(static_cast<State>(i - 1), x) + 1;
        b.set(name(i, j), x, name(k, j + 1));
      }
    }
  }

  StateSet s(b.size());
  for (State i = 0; i < p; ++i) s.insert(i);

  nlohmann::json params{{"p", p}};
  GadgetBundle out{b.complete()};
  out.subset = s;
  out.expected = {{"length_bound", static_cast<std::int64_t>(p)}};
  out.source = make_provenance("layered-subset", params, serialize_dfa(a));
  return out;
}

}  // namespace wasync
