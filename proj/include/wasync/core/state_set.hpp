#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace wasync {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A subset of {0, ..., universe_size - 1}, stored as a bit vector.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe_size);
  StateSet(std::size_t universe_size, std::initializer_list<State> members);
  StateSet(std::size_t universe_size, std::span<const State> members);

  static StateSet full(std::size_t universe_size);

  std::size_t universe_size() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(State q) const noexcept;
  void insert(State q);
  void erase(State q);
  void clear() noexcept;

  /// Smallest member. Undefined on an empty set.
  State first() const noexcept;

  std::vector<State> members() const;

  bool is_subset_of(const StateSet& other) const;

  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  StateSet& operator-=(const StateSet& other);

  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  bool operator==(const StateSet& other) const = default;
  /// Lexicographic on the sorted member lists.
  bool lex_less(const StateSet& other) const;

  std::size_t hash() const noexcept;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        f(static_cast<State>(w * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return bits_; }

 private:
  void check_compatible(const StateSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace wasync

template <>
struct std::hash<wasync::StateSet> {
  std::size_t operator()(const wasync::StateSet& s) const noexcept { return s.hash(); }
};
