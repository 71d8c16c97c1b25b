#include "wasync/core/automaton.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "wasync/core/error.hpp"

namespace wasync {

namespace {

void check_names(const std::vector<std::string>& names, std::size_t expected, const char* what) {
  if (names.empty()) return;
  if (names.size() != expected) {
    throw InputError(std::string(what) + " name table has " + std::to_string(names.size()) +
                     " entries, expected " + std::to_string(expected));
  }
  std::set<std::string_view> seen;
  for (const auto& name : names) {
    if (name.empty()) throw InputError(std::string("empty ") + what + " name");
    if (std::any_of(name.begin(), name.end(), [](char c) { return c == ' ' || c == '\t' || c == '\n'; })) {
      throw InputError(std::string(what) + " name '" + name + "' contains whitespace");
    }
    if (!seen.insert(name).second) {
      throw InputError(std::string("duplicate ") + what + " name '" + name + "'");
    }
  }
}

std::optional<std::size_t> parse_index(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

TransitionTable::TransitionTable(std::size_t n_states, std::size_t n_letters,
                                 std::vector<State> table, std::vector<std::string> letter_names,
                                 std::vector<std::string> state_names, bool allow_undefined)
    : n_states_(n_states),
      n_letters_(n_letters),
      table_(std::move(table)),
      letter_names_(std::move(letter_names)),
      state_names_(std::move(state_names)) {
  if (n_states_ == 0) throw InputError("automaton needs at least one state");
  if (n_letters_ == 0) throw InputError("automaton needs at least one letter");
  if (table_.size() != n_states_ * n_letters_) {
    throw InputError("transition table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(n_states_ * n_letters_));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const State t = table_[i];
    if (t == kUndefined) {
      if (!allow_undefined) {
        throw InputError("undefined transition from state " + std::to_string(i / n_letters_) +
                         " on letter " + std::to_string(i % n_letters_) + " in a complete automaton");
      }
      continue;
    }
    if (t >= n_states_) {
      throw InputError("transition target " + std::to_string(t) + " out of range");
    }
  }
  check_names(letter_names_, n_letters_, "letter");
  check_names(state_names_, n_states_, "state");
}

std::string TransitionTable::letter_name(Letter a) const {
  if (!letter_names_.empty()) return letter_names_.at(a);
  if (n_letters_ == 2) return a == 0 ? "0" : "1";
  return "a" + std::to_string(a);
}

std::string TransitionTable::state_name(State q) const {
  if (!state_names_.empty()) return state_names_.at(q);
  return std::to_string(q);
}

std::optional<State> TransitionTable::find_state(std::string_view name) const {
  for (std::size_t q = 0; q < state_names_.size(); ++q) {
    if (state_names_[q] == name) return static_cast<State>(q);
  }
  if (auto idx = parse_index(name); idx && *idx < n_states_) return static_cast<State>(*idx);
  return std::nullopt;
}

std::optional<Letter> TransitionTable::find_letter(std::string_view name) const {
  for (Letter a = 0; a < n_letters_; ++a) {
    if (letter_name(a) == name) return a;
  }
  return std::nullopt;
}

void TransitionTable::check_state(State q) const {
  if (q >= n_states_) {
    throw InputError("state " + std::to_string(q) + " out of range (n_states = " +
                     std::to_string(n_states_) + ")");
  }
}

void TransitionTable::check_letter(Letter a) const {
  if (a >= n_letters_) {
    throw InputError("letter " + std::to_string(a) + " out of range (n_letters = " +
                     std::to_string(n_letters_) + ")");
  }
}

void TransitionTable::check_word(const Word& w) const {
  for (Letter a : w.letters) check_letter(a);
}

Dfa::Dfa(std::size_t n_states, std::size_t n_letters, std::vector<State> table,
         std::vector<std::string> letter_names, std::vector<std::string> state_names)
    : TransitionTable(n_states, n_letters, std::move(table), std::move(letter_names),
                      std::move(state_names), /*allow_undefined=*/false) {}

Dfa Dfa::identity(std::size_t n_states, std::size_t n_letters) {
  std::vector<State> table(n_states * n_letters);
  for (std::size_t q = 0; q < n_states; ++q) {
    for (std::size_t a = 0; a < n_letters; ++a) table[q * n_letters + a] = static_cast<State>(q);
  }
  return Dfa(n_states, n_letters, std::move(table));
}

PartialDfa::PartialDfa(std::size_t n_states, std::size_t n_letters, std::vector<State> table,
                       std::vector<std::string> letter_names,
                       std::vector<std::string> state_names)
    : TransitionTable(n_states, n_letters, std::move(table), std::move(letter_names),
                      std::move(state_names), /*allow_undefined=*/true) {}

PartialDfa::PartialDfa(const Dfa& complete)
    : PartialDfa(complete.n_states(), complete.n_letters(),
                 std::vector<State>(complete.table().begin(), complete.table().end()),
                 complete.letter_names(), complete.state_names()) {}

bool PartialDfa::is_complete() const {
  return std::none_of(table().begin(), table().end(), [](State t) { return t == kUndefined; });
}

std::optional<Dfa> PartialDfa::to_dfa() const {
  if (!is_complete()) return std::nullopt;
  return Dfa(n_states(), n_letters(), std::vector<State>(table().begin(), table().end()),
             letter_names(), state_names());
}

const TransitionTable& table_of(const AnyAutomaton& a) {
  return std::visit([](const auto& x) -> const TransitionTable& { return x; }, a);
}

State apply(const Dfa& a, State q, const Word& w) {
  a.check_state(q);
  a.check_word(w);
  for (Letter x : w.letters) q = a.next(q, x);
  return q;
}

StateSet image(const Dfa& a, const StateSet& s, Letter letter) {
  a.check_letter(letter);
  StateSet out(a.n_states());
  s.for_each([&](State q) { out.insert(a.next(q, letter)); });
  return out;
}

StateSet image(const Dfa& a, const StateSet& s, const Word& w) {
  if (s.universe_size() != a.n_states()) {
    throw InputError("state set universe does not match automaton");
  }
  a.check_word(w);
  StateSet current = s;
  for (Letter x : w.letters) current = image(a, current, x);
  return current;
}

std::optional<StateSet> partial_step(const PartialDfa& a, const StateSet& s, Letter letter) {
  StateSet out(a.n_states());
  bool ok = true;
  s.for_each([&](State q) {
    if (!ok) return;
    const State t = a.at(q, letter);
    if (t == kUndefined) {
      ok = false;
      return;
    }
    out.insert(t);
  });
  if (!ok) return std::nullopt;
  return out;
}

PartialImage partial_image(const PartialDfa& a, const StateSet& s, const Word& w) {
  if (s.universe_size() != a.n_states()) {
    throw InputError("state set universe does not match automaton");
  }
  a.check_word(w);
  StateSet current = s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter x = w[i];
    StateSet next(a.n_states());
    std::optional<State> bad;
    current.for_each([&](State q) {
      if (bad) return;
      const State t = a.at(q, x);
      if (t == kUndefined) {
        bad = q;
      } else {
        next.insert(t);
      }
    });
    if (bad) return PartialImage{std::nullopt, UndefinedStep{i, *bad, x}};
    current = std::move(next);
  }
  return PartialImage{std::move(current), std::nullopt};
}

std::string render_word(const TransitionTable& a, const Word& w) {
  bool single_char = true;
  for (Letter x = 0; x < a.n_letters(); ++x) single_char = single_char && a.letter_name(x).size() == 1;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char && i > 0) out += ' ';
    out += a.letter_name(w[i]);
  }
  return out;
}

std::string render_set(const TransitionTable& a, const StateSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](State q) {
    if (!first) out += ',';
    first = false;
    out += a.state_name(q);
  });
  return out + "}";
}

Word parse_word(const TransitionTable& a, std::string_view text) {
  Word w;
  text = trim(text);
  if (text.empty()) return w;
  if (text.find(' ') == std::string_view::npos) {
    if (auto x = a.find_letter(text)) return Word{*x};
    // a run of one-character letter names
    for (char c : text) {
      auto x = a.find_letter(std::string_view(&c, 1));
      if (!x) throw InputError("unknown letter '" + std::string(1, c) + "' in word");
      w.push_back(*x);
    }
    return w;
  }
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto x = a.find_letter(token);
    if (!x) throw InputError("unknown letter '" + token + "' in word");
    w.push_back(*x);
  }
  return w;
}

StateSet parse_state_list(const TransitionTable& a, std::string_view text) {
  StateSet out(a.n_states());
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    auto q = a.find_state(token);
    if (!q) throw InputError("unknown state '" + std::string(token) + "'");
    out.insert(*q);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace wasync
