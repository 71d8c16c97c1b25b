#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wasync/core/automaton.hpp"

namespace wasync {

/// Square 0/1 matrix stored as one bitset per row.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n);  // zero matrix

  static BoolMatrix zero(std::size_t n) { return BoolMatrix(n); }
  static BoolMatrix identity(std::size_t n);
  static BoolMatrix all_ones(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true);

  std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * stride_, stride_}; }
  std::span<std::uint64_t> row(std::size_t i) { return {bits_.data() + i * stride_, stride_}; }

  bool is_all_ones() const;
  bool is_zero() const;
  std::size_t hash() const noexcept;

  bool operator==(const BoolMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// OR-of-ANDs product. Rows are computed in parallel for large n.
BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b);
/// Single-threaded reference of bool_mul.
BoolMatrix bool_mul_serial(const BoolMatrix& a, const BoolMatrix& b);

/// Entry (q, q') is 1 iff delta(q, letter) = q'. Undefined rows stay zero.
BoolMatrix transition_matrix(const TransitionTable& a, Letter letter);

/// Matrix of the (possibly partial) map q -> delta(q, w).
BoolMatrix word_matrix(const TransitionTable& a, const Word& w);

enum class Orientation { kUpper, kLower };

/// All 1-entries on or above (kUpper) or on or below (kLower) the diagonal.
bool is_triangular(const BoolMatrix& m, Orientation orientation);

}  // namespace wasync

template <>
struct std::hash<wasync::BoolMatrix> {
  std::size_t operator()(const wasync::BoolMatrix& m) const noexcept { return m.hash(); }
};
