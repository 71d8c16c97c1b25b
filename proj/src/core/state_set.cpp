#include "wasync/core/state_set.hpp"

#include <bit>

#include "wasync/core/error.hpp"

namespace wasync {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

StateSet::StateSet(std::size_t universe_size)
    : universe_(universe_size), bits_(word_count(universe_size), 0) {}

StateSet::StateSet(std::size_t universe_size, std::initializer_list<State> members)
    : StateSet(universe_size) {
  for (State q : members) insert(q);
}

StateSet::StateSet(std::size_t universe_size, std::span<const State> members)
    : StateSet(universe_size) {
  for (State q : members) insert(q);
}

StateSet StateSet::full(std::size_t universe_size) {
  StateSet s(universe_size);
  for (std::size_t w = 0; w < s.bits_.size(); ++w) s.bits_[w] = ~std::uint64_t{0};
  if (const std::size_t tail = universe_size % 64; tail != 0) {
    s.bits_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

std::size_t StateSet::size() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool StateSet::empty() const noexcept {
  for (std::uint64_t w : bits_) {
    if (w != 0) return false;
  }
  return true;
}

bool StateSet::contains(State q) const noexcept {
  if (q >= universe_) return false;
  return (bits_[q / 64] >> (q % 64)) & 1U;
}

void StateSet::insert(State q) {
  if (q >= universe_) {
    throw InputError("state " + std::to_string(q) + " outside universe of size " +
                     std::to_string(universe_));
  }
  bits_[q / 64] |= std::uint64_t{1} << (q % 64);
}

void StateSet::erase(State q) {
  if (q < universe_) bits_[q / 64] &= ~(std::uint64_t{1} << (q % 64));
}

void StateSet::clear() noexcept {
  for (auto& w : bits_) w = 0;
}

State StateSet::first() const noexcept {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] != 0) {
      return static_cast<State>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits_[w])));
    }
  }
  return static_cast<State>(universe_);
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  out.reserve(size());
  for_each([&](State q) { out.push_back(q); });
  return out;
}

void StateSet::check_compatible(const StateSet& other) const {
  if (universe_ != other.universe_) {
    throw InputError("state sets over different universes (" + std::to_string(universe_) +
                     " vs " + std::to_string(other.universe_) + ")");
  }
}

bool StateSet::is_subset_of(const StateSet& other) const {
  check_compatible(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  }
  return true;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= other.bits_[w];
  return *this;
}

StateSet& StateSet::operator-=(const StateSet& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= ~other.bits_[w];
  return *this;
}

bool StateSet::lex_less(const StateSet& other) const {
  const auto a = members();
  const auto b = other.members();
  return a < b;
}

std::size_t StateSet::hash() const noexcept {
  // splitmix-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (std::uint64_t w : bits_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace wasync
