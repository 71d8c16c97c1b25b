#include <gtest/gtest.h>

#include "naive.hpp"
#include "wasync/core/error.hpp"
#include "wasync/engines/sync.hpp"
#include "wasync/gadgets/sat_gadgets.hpp"
#include "wasync/harness/generators.hpp"
#include "wasync/matrix/matrix_io.hpp"
#include "wasync/matrix/semigroup.hpp"
#include "wasync/oracles/brute.hpp"

using namespace wasync;

namespace {

BoolMatrix random_matrix(naive::Gen& g, std::size_t n, double density) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.coin(density)) m.set(i, j);
  return m;
}

naive::Matrix to_naive(const BoolMatrix& m) {
  naive::Matrix out(m.n(), std::vector<bool>(m.n()));
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) out[i][j] = m.get(i, j);
  return out;
}

}  // namespace

TEST(BoolMatrix, Identities) {
  naive::Gen g(1);
  for (std::size_t n : {1, 5, 64, 65, 130}) {
    const BoolMatrix a = random_matrix(g, n, 0.3);
    EXPECT_EQ(bool_mul(BoolMatrix::identity(n), a), a);
    EXPECT_EQ(bool_mul(a, BoolMatrix::identity(n)), a);
    EXPECT_TRUE(bool_mul(BoolMatrix::zero(n), a).is_zero());
    EXPECT_TRUE(BoolMatrix::all_ones(n).is_all_ones());
    EXPECT_FALSE(BoolMatrix::identity(n + 1).is_all_ones());
  }
}

TEST(BoolMatrix, ParallelMatchesSerialAndReference) {
  naive::Gen g(2);
  for (std::size_t n : {3, 17, 64, 100, 128, 200}) {
    for (double d : {0.02, 0.1, 0.5}) {
      const BoolMatrix a = random_matrix(g, n, d), b = random_matrix(g, n, d);
      const BoolMatrix par = bool_mul(a, b);
      EXPECT_EQ(par, bool_mul_serial(a, b));
      if (n <= 128) EXPECT_EQ(to_naive(par), naive::mul(to_naive(a), to_naive(b)));
    }
  }
}

TEST(BoolMatrix, SizeMismatchThrows) {
  EXPECT_THROW(bool_mul(BoolMatrix(2), BoolMatrix(3)), InputError);
}

TEST(TransitionMatrix, Examples) {
  const Dfa a(3, 2, {1, 0, 2, 0, 2, 2});
  const BoolMatrix m = transition_matrix(a, 0);
  EXPECT_TRUE(m.get(0, 1));
  EXPECT_TRUE(m.get(1, 2));
  EXPECT_TRUE(m.get(2, 2));
  EXPECT_FALSE(m.get(0, 0));
  const PartialDfa p(2, 1, {kUndefined, 0});
  const BoolMatrix pm = transition_matrix(p, 0);
  EXPECT_FALSE(pm.get(0, 0) || pm.get(0, 1));
  EXPECT_TRUE(pm.get(1, 0));
}

TEST(MatrixProperty, Homomorphism) {
  naive::Gen g(3);
  for (int i = 0; i < 300; ++i) {
    const PartialDfa a = g.partial(g.range(1, 8), 2, 0.2);
    const Word u = g.word(2, 5), v = g.word(2, 5);
    EXPECT_EQ(word_matrix(a, u + v), bool_mul(word_matrix(a, u), word_matrix(a, v)));
  }
}

TEST(PositiveProduct, Examples) {
  const PositiveProductResult one = positive_product_search(gadget_sat_matrices(CnfFormula(1, {{1}})).matrices);
  ASSERT_EQ(one.outcome, ProductOutcome::kFound);
  EXPECT_EQ(one.sequence, (std::vector<std::size_t>{2, 1, 0, 3}));

  const PositiveProductResult none =
      positive_product_search(gadget_sat_matrices(CnfFormula(1, {{1}, {-1}})).matrices);
  EXPECT_EQ(none.outcome, ProductOutcome::kExhausted);
  EXPECT_TRUE(none.sequence.empty());

  const PositiveProductResult ones = positive_product_search({BoolMatrix::all_ones(3)});
  EXPECT_EQ(ones.sequence, (std::vector<std::size_t>{0}));

  EXPECT_EQ(positive_product_search({BoolMatrix::identity(3)}).outcome, ProductOutcome::kExhausted);
}

TEST(PositiveProduct, CapIsInconclusive) {
  const MatrixGadget g = gadget_sat_matrices(CnfFormula(3, {{1, 2, 3}, {-1, -2}, {2, -3}}));
  EXPECT_EQ(positive_product_search(g.matrices, 3).outcome, ProductOutcome::kInconclusive);
}

TEST(PositiveProduct, FoundIffCarefullySynchronizing) {
  for (std::uint64_t s = 0; s < 120; ++s) {
    const CnfFormula f = gen_random_cnf(1 + s % 3, 1 + (s / 3) % 3, 1 + s % 2, 1000 + s);
    const GadgetBundle careful = gadget_sat_careful(f);
    const MatrixGadget m = gadget_sat_matrices(f);
    const PositiveProductResult r = positive_product_search(m.matrices);
    ASSERT_NE(r.outcome, ProductOutcome::kInconclusive);
    EXPECT_EQ(r.outcome == ProductOutcome::kFound, careful_shortest_word(careful.partial()).synchronizing);
    EXPECT_EQ(r.outcome == ProductOutcome::kFound, sat_solve_brute(f).has_value());
    if (r.outcome == ProductOutcome::kFound) {
      BoolMatrix p = m.matrices[r.sequence[0]];
      for (std::size_t i = 1; i < r.sequence.size(); ++i) p = bool_mul(p, m.matrices[r.sequence[i]]);
      EXPECT_TRUE(p.is_all_ones());
    }
  }
}

TEST(Triangular, SatMatricesAlwaysTriangular) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const MatrixGadget g = gadget_sat_matrices(gen_random_cnf(1 + s % 4, 1 + s % 5, 3, s));
    EXPECT_TRUE(is_triangular(g.matrices[0], Orientation::kUpper));
    EXPECT_TRUE(is_triangular(g.matrices[1], Orientation::kUpper));
    EXPECT_TRUE(is_triangular(g.matrices[2], Orientation::kLower));
    EXPECT_TRUE(is_triangular(g.matrices[3], Orientation::kLower));
  }
  EXPECT_TRUE(is_triangular(BoolMatrix::identity(4), Orientation::kUpper));
  EXPECT_FALSE(is_triangular(BoolMatrix::all_ones(2), Orientation::kLower));
}

TEST(MatrixIo, RoundTripAndErrors) {
  naive::Gen g(4);
  std::vector<BoolMatrix> ms;
  for (int i = 0; i < 3; ++i) ms.push_back(random_matrix(g, 5, 0.4));
  EXPECT_EQ(parse_matrices(serialize_matrices(ms)), ms);
  EXPECT_EQ(parse_matrices("# c\nmat 1 2\n10\n\n01\n"), (std::vector<BoolMatrix>{BoolMatrix::identity(2)}));
  EXPECT_THROW(parse_matrices("mat 1 2\n10\n0x\n"), ParseError);
  EXPECT_THROW(parse_matrices("mat 1 2\n10\n"), ParseError);
}
