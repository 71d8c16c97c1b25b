#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wasync/core/state_set.hpp"

namespace wasync {

/// Table entry of a partial automaton with no transition.
inline constexpr State kUndefined = std::numeric_limits<State>::max();

/// A sequence of letter indices. Validity is checked when it is applied.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> init) : letters(init) {}
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }
  void push_back(Letter a) { letters.push_back(a); }

  Word& operator+=(const Word& other) {
    letters.insert(letters.end(), other.letters.begin(), other.letters.end());
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

/// Shared storage of complete and partial transition tables: row-major
/// `n_states x n_letters`, plus optional display names.
class TransitionTable {
 public:
  std::size_t n_states() const noexcept { return n_states_; }
  std::size_t n_letters() const noexcept { return n_letters_; }

  /// Raw entry; kUndefined only occurs in partial tables.
  State at(State q, Letter a) const { return table_[static_cast<std::size_t>(q) * n_letters_ + a]; }
  std::span<const State> row(State q) const {
    return {table_.data() + static_cast<std::size_t>(q) * n_letters_, n_letters_};
  }
  std::span<const State> table() const noexcept { return table_; }

  bool has_letter_names() const noexcept { return !letter_names_.empty(); }
  bool has_state_names() const noexcept { return !state_names_.empty(); }
  const std::vector<std::string>& letter_names() const noexcept { return letter_names_; }
  const std::vector<std::string>& state_names() const noexcept { return state_names_; }

  /// Attached name, or '0'/'1' for binary alphabets, 'a<i>' otherwise.
  std::string letter_name(Letter a) const;
  /// Attached name, or the decimal index.
  std::string state_name(State q) const;

  std::optional<State> find_state(std::string_view name) const;
  std::optional<Letter> find_letter(std::string_view name) const;

  void check_state(State q) const;
  void check_letter(Letter a) const;
  void check_word(const Word& w) const;

  bool operator==(const TransitionTable&) const = default;

 protected:
  TransitionTable(std::size_t n_states, std::size_t n_letters, std::vector<State> table,
                  std::vector<std::string> letter_names, std::vector<std::string> state_names,
                  bool allow_undefined);

 private:
  std::size_t n_states_ = 0;
  std::size_t n_letters_ = 0;
  std::vector<State> table_;
  std::vector<std::string> letter_names_;
  std::vector<std::string> state_names_;
};

/// Complete deterministic automaton without initial or accepting states.
class Dfa : public TransitionTable {
 public:
  Dfa(std::size_t n_states, std::size_t n_letters, std::vector<State> table,
      std::vector<std::string> letter_names = {}, std::vector<std::string> state_names = {});

  /// Every letter fixes every state.
  static Dfa identity(std::size_t n_states, std::size_t n_letters);

  State next(State q, Letter a) const { return at(q, a); }

  bool operator==(const Dfa&) const = default;
};

/// Deterministic automaton whose table may contain kUndefined.
class PartialDfa : public TransitionTable {
 public:
  PartialDfa(std::size_t n_states, std::size_t n_letters, std::vector<State> table,
             std::vector<std::string> letter_names = {},
             std::vector<std::string> state_names = {});
  explicit PartialDfa(const Dfa& complete);

  bool defined(State q, Letter a) const { return at(q, a) != kUndefined; }
  bool is_complete() const;
  /// The same table as a Dfa, if no entry is undefined.
  std::optional<Dfa> to_dfa() const;

  bool operator==(const PartialDfa&) const = default;
};

using AnyAutomaton = std::variant<Dfa, PartialDfa>;

const TransitionTable& table_of(const AnyAutomaton& a);

/// delta(q, w), folding left to right.
State apply(const Dfa& a, State q, const Word& w);

/// {delta(q, w) | q in s}.
StateSet image(const Dfa& a, const StateSet& s, const Word& w);
StateSet image(const Dfa& a, const StateSet& s, Letter letter);

/// Where a word first became undefined on the running image.
struct UndefinedStep {
  std::size_t position;  ///< index into the word
  State state;
  Letter letter;
};

struct PartialImage {
  std::optional<StateSet> image;        ///< set iff every prefix was defined
  std::optional<UndefinedStep> failure; ///< set iff image is not

  bool defined() const noexcept { return image.has_value(); }
};

PartialImage partial_image(const PartialDfa& a, const StateSet& s, const Word& w);

/// Image of `s` under a single letter, or nullopt if the letter is undefined
/// on some member.
std::optional<StateSet> partial_step(const PartialDfa& a, const StateSet& s, Letter letter);

/// Letters through the letter-name table. Single-character names are
/// concatenated ("1010"); longer names are space separated ("v~1 nu v~2").
std::string render_word(const TransitionTable& a, const Word& w);
std::string render_set(const TransitionTable& a, const StateSet& s);

/// Inverse of render_word. Accepts space-separated names, or a run of
/// single-character names when every letter name is one character.
Word parse_word(const TransitionTable& a, std::string_view text);

/// Comma-separated state names or indices; names take precedence.
StateSet parse_state_list(const TransitionTable& a, std::string_view text);

}  // namespace wasync
