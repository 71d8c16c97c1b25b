#include "wasync/matrix/bool_matrix.hpp"

#include <algorithm>

#include "wasync/core/error.hpp"

namespace wasync {

namespace {

constexpr std::size_t kParallelRows = 128;

void check_same(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.n() != b.n()) {
    throw InputError("matrix dimension mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
}

void mul_row(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out, std::size_t i) {
  auto dst = out.row(i);
  const auto src = a.row(i);
  for (std::size_t w = 0; w < src.size(); ++w) {
    std::uint64_t word = src[w];
    while (word != 0) {
      const std::size_t k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(word));
      word &= word - 1;
      const auto bk = b.row(k);
      for (std::size_t x = 0; x < dst.size(); ++x) dst[x] |= bk[x];
    }
  }
}

}  // namespace

BoolMatrix::BoolMatrix(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::all_ones(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j);
  }
  return m;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= n_ || j >= n_) throw InputError("matrix index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  auto& word = bits_[i * stride_ + j / 64];
  word = value ? (word | bit) : (word & ~bit);
}

bool BoolMatrix::is_all_ones() const {
  if (n_ == 0) return true;
  const std::size_t tail = n_ % 64;
  const std::uint64_t last = tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  for (std::size_t i = 0; i < n_; ++i) {
    const auto r = row(i);
    for (std::size_t w = 0; w + 1 < stride_; ++w) {
      if (r[w] != ~std::uint64_t{0}) return false;
    }
    if (r[stride_ - 1] != last) return false;
  }
  return true;
}

bool BoolMatrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BoolMatrix::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ n_;
  for (std::uint64_t w : bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

BoolMatrix bool_mul_serial(const BoolMatrix& a, const BoolMatrix& b) {
  check_same(a, b);
  BoolMatrix out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) mul_row(a, b, out, i);
  return out;
}

BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b) {
  check_same(a, b);
  BoolMatrix out(a.n());
  const auto n = static_cast<std::ptrdiff_t>(a.n());
#pragma omp parallel for schedule(static) if (a.n() >= kParallelRows)
  for (std::ptrdiff_t i = 0; i < n; ++i) mul_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

BoolMatrix transition_matrix(const TransitionTable& a, Letter letter) {
  a.check_letter(letter);
  BoolMatrix m(a.n_states());
  for (State q = 0; q < a.n_states(); ++q) {
    const State t = a.at(q, letter);
    if (t != kUndefined) m.set(q, t);
  }
  return m;
}

BoolMatrix word_matrix(const TransitionTable& a, const Word& w) {
  a.check_word(w);
  BoolMatrix m(a.n_states());
  for (State q = 0; q < a.n_states(); ++q) {
    State cur = q;
    for (Letter x : w.letters) {
      cur = a.at(cur, x);
      if (cur == kUndefined) break;
    }
    if (cur != kUndefined) m.set(q, cur);
  }
  return m;
}

bool is_triangular(const BoolMatrix& m, Orientation orientation) {
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (!m.get(i, j)) continue;
      if (orientation == Orientation::kUpper ? j < i : j > i) return false;
    }
  }
  return true;
}

}  // namespace wasync
