#include <gtest/gtest.h>

#include "wasync/core/error.hpp"
#include "wasync/harness/generators.hpp"
#include "wasync/oracles/brute.hpp"
#include "wasync/oracles/dimacs.hpp"
#include "wasync/oracles/word_enumeration.hpp"

using namespace wasync;

TEST(BruteSat, Examples) {
  const auto a = sat_solve_brute(CnfFormula(2, {{1, -2}, {2}}));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->values, (std::vector<bool>{true, true}));
  EXPECT_FALSE(sat_solve_brute(CnfFormula(1, {{1}, {-1}})));
  // Lexicographically first: x1 false preferred.
  EXPECT_EQ(sat_solve_brute(CnfFormula(2, {{1, 2}}))->values, (std::vector<bool>{false, true}));
}

TEST(BruteSat, WitnessSatisfiesAndUnsatIsExhaustive) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const CnfFormula f = gen_random_cnf(1 + s % 5, 1 + s % 7, 1 + s % 3, s);
    const auto a = sat_solve_brute(f);
    if (a) {
      EXPECT_TRUE(satisfies(f, *a));
      continue;
    }
    for (std::uint32_t mask = 0; mask < (1u << f.n_vars()); ++mask) {
      Assignment x;
      for (std::size_t i = 0; i < f.n_vars(); ++i) x.values.push_back((mask >> i) & 1u);
      EXPECT_FALSE(satisfies(f, x));
    }
  }
}

TEST(Cnf, RejectsBadClauses) {
  EXPECT_THROW(CnfFormula(2, {{}}), InputError);
  EXPECT_THROW(CnfFormula(2, {{3}}), InputError);
  EXPECT_THROW(CnfFormula(2, {{0}}), InputError);
}

TEST(BruteMis, Examples) {
  EXPECT_EQ(max_independent_set_brute(Graph(3, {{0, 1}, {1, 2}})).vertices, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(max_independent_set_brute(Graph(3, {})).alpha, 3u);
  EXPECT_EQ(max_independent_set_brute(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).alpha, 1u);
}

TEST(BruteChi, Examples) {
  EXPECT_EQ(chromatic_number_brute(Graph(3, {{0, 1}, {1, 2}})).chi, 2u);
  EXPECT_EQ(chromatic_number_brute(Graph(3, {})).chi, 1u);
  EXPECT_EQ(chromatic_number_brute(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).chi, 3u);
  // Odd cycle C5.
  EXPECT_EQ(chromatic_number_brute(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})).chi, 3u);
}

TEST(GraphOracles, AgreeWithSubsetEnumeration) {
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::uint64_t s = 0; s < 40; ++s) {
      const Graph g = gen_random_graph(p, 0.5, 100 * p + s);
      std::size_t alpha = 0;
      for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < p; ++v)
          if ((mask >> v) & 1u) vs.push_back(v);
        if (is_independent(g, vs)) alpha = std::max(alpha, vs.size());
      }
      const IndependentSet is = max_independent_set_brute(g);
      EXPECT_EQ(is.alpha, alpha);
      EXPECT_TRUE(is_independent(g, is.vertices));
      const Coloring c = chromatic_number_brute(g);
      EXPECT_TRUE(is_proper_coloring(g, c.colors));
      // chi - 1 colors never suffice: every (chi-1)-coloring is improper.
      if (c.chi > 1) {
        std::vector<std::size_t> col(p, 0);
        bool found = false;
        while (true) {
          if (is_proper_coloring(g, col)) found = true;
          std::size_t i = 0;
          while (i < p && ++col[i] == c.chi - 1) col[i++] = 0;
          if (i == p) break;
        }
        EXPECT_FALSE(found);
      }
    }
}

TEST(Graph, RejectsSelfLoopAndRange) {
  EXPECT_THROW(Graph(2, {{1, 1}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 2}}), InputError);
  EXPECT_EQ(Graph(3, {{1, 0}, {0, 1}}).edges().size(), 1u);
  EXPECT_EQ(all_graphs(3).size(), 8u);
}

TEST(Dimacs, CnfExamples) {
  const CnfFormula f = parse_dimacs_cnf("c hello\np cnf 2 2\n1 -2 0\n2 0\n");
  EXPECT_EQ(f, CnfFormula(2, {{1, -2}, {2}}));
  EXPECT_EQ(parse_dimacs_cnf(serialize_dimacs_cnf(f)), f);
  EXPECT_EQ(parse_dimacs_cnf("p cnf 1 1\n1 0\n%\n0\n"), CnfFormula(1, {{1}}));
  EXPECT_THROW(parse_dimacs_cnf("p cnf 1 1\n2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs_cnf("1 0\n"), ParseError);
}

TEST(Dimacs, GraphExamples) {
  const Graph g = parse_dimacs_graph("c x\np edge 3 2\ne 1 2\ne 2 3\n");
  EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(parse_dimacs_graph(serialize_dimacs_graph(g)), g);
  EXPECT_THROW(parse_dimacs_graph("p edge 2 1\ne 1 1\n"), ParseError);
  EXPECT_THROW(parse_dimacs_graph("p edge 2 1\ne 1 3\n"), ParseError);
}

TEST(Enumeration, Examples) {
  const Dfa a(2, 1, {0, 0});
  EXPECT_EQ(enumerate_sync_word(a, 3).word->size(), 1u);
  EXPECT_FALSE(enumerate_sync_word(Dfa::identity(2, 2), 4).word);
  EXPECT_EQ(enumerate_sync_word(Dfa::identity(2, 2), 4).words_tried, 31u);
  EXPECT_EQ(monoid_shortest_sync_word(Dfa::identity(3, 2)).elements, 1u);
  EXPECT_THROW(monoid_shortest_sync_word(gen_random_dfa(8, 3, 1), 2), ResourceError);
}
