#include <gtest/gtest.h>

#include <filesystem>

#include "naive.hpp"
#include "wasync/core/dfa_io.hpp"
#include "wasync/core/error.hpp"
#include "wasync/core/structure.hpp"
#include "wasync/engines/max_sync.hpp"
#include "wasync/engines/rank.hpp"
#include "wasync/engines/sync.hpp"
#include "wasync/gadgets/bundle_io.hpp"
#include "wasync/gadgets/digest.hpp"
#include "wasync/gadgets/families.hpp"
#include "wasync/gadgets/maxsync_gadgets.hpp"
#include "wasync/gadgets/rank_gadgets.hpp"
#include "wasync/gadgets/sat_gadgets.hpp"
#include "wasync/harness/generators.hpp"
#include "wasync/matrix/semigroup.hpp"
#include "wasync/oracles/brute.hpp"

using namespace wasync;

namespace {

const Graph kP3(3, {{0, 1}, {1, 2}});
const Graph kK3(3, {{0, 1}, {1, 2}, {0, 2}});
Graph edgeless(std::size_t p) { return Graph(p, {}); }

std::size_t subset_length(const GadgetBundle& b) {
  const SyncResult r = subset_shortest_sync_word(b.dfa(), *b.subset);
  EXPECT_TRUE(r.synchronizing);
  return r.witness ? r.witness->size() : 0;
}

}  // namespace

TEST(TightFamily, Examples) {
  const GadgetBundle b = family_tight_rank(4, 2);
  EXPECT_EQ(b.table().n_states(), 4u);
  const RankResult r = rank_of_automaton(b.dfa(), RankMode::kExact);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.witness.size(), 2u);

  const GadgetBundle id = family_tight_rank(5, 5);
  EXPECT_EQ(id.dfa(), Dfa(5, 1, {0, 1, 2, 3, 4}, {"x"}, id.table().state_names()));
  EXPECT_EQ(shortest_sync_word(family_tight_rank(5, 1).dfa()).witness->size(), 4u);
  EXPECT_THROW(family_tight_rank(3, 0), InputError);
  EXPECT_THROW(family_tight_rank(3, 4), InputError);
}

TEST(BinarySubsetFamily, Examples) {
  const GadgetBundle b = family_subset_binary(5, 3);
  EXPECT_EQ(subset_length(b), 4u);
  EXPECT_EQ(b.expected.at("shortest_length"), 4);
  for (std::size_t n = 3; n <= 9; ++n) EXPECT_EQ(subset_length(family_subset_binary(n, 2)), n - 2);
  EXPECT_EQ(subset_length(family_subset_binary(6, 4)), 6u);
  EXPECT_THROW(family_subset_binary(4, 4), InputError);
  EXPECT_THROW(family_subset_binary(4, 1), InputError);
}

TEST(BinarySubsetFamily, BinaryWeaklyAcyclicRankTwo) {
  for (std::size_t n = 4; n <= 10; ++n)
    for (std::size_t k = 2; k < n; ++k) {
      const GadgetBundle b = family_subset_binary(n, k);
      EXPECT_EQ(b.table().n_states(), n);
      EXPECT_EQ(b.table().n_letters(), 2u);
      EXPECT_TRUE(is_weakly_acyclic(b.table()));
      EXPECT_EQ(rank_of_automaton(b.dfa(), RankMode::kExact).rank, 2u);
    }
}

TEST(ReviewerFamily, Examples) {
  EXPECT_EQ(subset_length(family_subset_large_alphabet(4, 3)), 3u);
  EXPECT_EQ(subset_length(family_subset_large_alphabet(5, 2)), 3u);
  EXPECT_THROW(family_subset_large_alphabet(5, 1), InputError);
  const GadgetBundle b = family_subset_large_alphabet(7, 4);
  EXPECT_EQ(b.table().n_letters(), 5u);
  EXPECT_EQ(*b.subset, parse_state_list(b.table(), "q0,q5,q4,q3"));
}

TEST(LayeredSubset, Examples) {
  const GadgetBundle merge = gadget_layered_subset(Dfa(2, 2, {0, 0, 0, 0}));
  EXPECT_EQ(subset_length(merge), 1u);
  const GadgetBundle id = gadget_layered_subset(Dfa::identity(2, 2));
  EXPECT_FALSE(subset_shortest_sync_word(id.dfa(), *id.subset).synchronizing);
  for (std::size_t p = 2; p <= 5; ++p) EXPECT_EQ(gadget_layered_subset(Dfa::identity(p, 2)).table().n_states(), p * (p + 1));
  EXPECT_THROW(gadget_layered_subset(Dfa::identity(2, 3)), InputError);
}

TEST(Padding, Examples) {
  const GadgetBundle merge = gadget_maxsync_padding(Dfa(2, 1, {0, 0}), StateSet::full(2));
  EXPECT_EQ(*merge.threshold, 6);
  EXPECT_GE(static_cast<std::int64_t>(max_sync_set(merge.dfa()).set.size()), *merge.threshold);

  const GadgetBundle empty = gadget_maxsync_padding(Dfa::identity(3, 2), StateSet(3));
  EXPECT_EQ(*empty.threshold, 0);
  EXPECT_EQ(empty.table().n_states(), 3u);
}

TEST(Padding, StateCount) {
  naive::Gen g(51);
  for (int i = 0; i < 50; ++i) {
    const Dfa a = g.dfa(g.range(1, 5), 2);
    const StateSet s = g.subset(a.n_states());
    EXPECT_EQ(gadget_maxsync_padding(a, s).table().n_states(), a.n_states() + (a.n_states() + 1) * s.size());
  }
}

TEST(IsLarge, Examples) {
  EXPECT_EQ(max_sync_set(gadget_is_maxsync_large_alphabet(kP3).dfa()).set.size(), 3u);
  const GadgetBundle e = gadget_is_maxsync_large_alphabet(edgeless(3));
  EXPECT_EQ(max_sync_set(e.dfa()).set.size(), 4u);
  EXPECT_EQ(image(e.dfa(), parse_state_list(e.table(), "s1,s2,s3,f"), parse_word(e.table(), "v~1 v~2 v~3")).size(), 1u);
  EXPECT_EQ(max_sync_set(gadget_is_maxsync_large_alphabet(kK3).dfa()).set.size(), 2u);
}

TEST(IsLarge, ShapeOnAllSmallGraphs) {
  for (std::size_t p = 1; p <= 4; ++p)
    for (const auto& g : all_graphs(p)) {
      const GadgetBundle b = gadget_is_maxsync_large_alphabet(g);
      EXPECT_EQ(b.table().n_states(), 2 * p + 1);
      EXPECT_EQ(b.table().n_letters(), p);
      EXPECT_TRUE(is_weakly_acyclic(b.table()));
      EXPECT_EQ(b.expected.at("alpha_plus_1"), static_cast<std::int64_t>(max_independent_set_brute(g).alpha + 1));
    }
}

TEST(IsBinary, EdgelessTwo) {
  const GadgetBundle b = gadget_is_maxsync_binary(edgeless(2));
  EXPECT_EQ(b.table().n_states(), 14u);
  EXPECT_EQ(b.expected.at("p_alpha_plus_1"), 5);
  EXPECT_EQ(max_sync_set(b.dfa()).set.size(), 5u);
}

TEST(IsBinary, StateCountAndWitness) {
  for (std::size_t p = 2; p <= 4; ++p) {
    for (const auto& g : {edgeless(p), gen_random_graph(p, 0.5, p)}) {
      const GadgetBundle b = gadget_is_maxsync_binary(g);
      EXPECT_EQ(b.table().n_states(), 4 * p * p - p);
      const IndependentSet is = max_independent_set_brute(g);
      const StateSet w = is_gadget_witness_set(b, is.vertices);
      EXPECT_EQ(w.size(), p * is.alpha + 1);
      EXPECT_EQ(image(b.dfa(), w, is_gadget_witness_word(p, is.vertices)).size(), 1u);
    }
  }
  EXPECT_EQ(gadget_is_maxsync_binary(kK3).expected.count("p_alpha_plus_1"), 0u);
}

TEST(IsBinaryWa, Examples) {
  const GadgetBundle b = gadget_is_maxsync_binary_wa(edgeless(2));
  EXPECT_EQ(b.table().n_states(), 21u);
  const std::size_t got = max_sync_set(b.dfa()).set.size();
  EXPECT_GE(got, 8u);
  EXPECT_LE(got, 11u);
  for (std::size_t p = 2; p <= 4; ++p) {
    const Graph g = gen_random_graph(p, 0.4, 7 * p);
    const GadgetBundle wa = gadget_is_maxsync_binary_wa(g);
    EXPECT_TRUE(is_weakly_acyclic(wa.table()));
    EXPECT_EQ(wa.table().n_states(), 2 * p * p * p + 2 * p * p - 2 * p + 1);
    const IndependentSet is = max_independent_set_brute(g);
    const StateSet w = is_gadget_witness_set(wa, is.vertices);
    EXPECT_EQ(w.size(), p * p * is.alpha + 1);
    EXPECT_EQ(image(wa.dfa(), w, is_gadget_witness_word(p, is.vertices)).size(), 1u);
  }
}

TEST(ChromaticRank, Examples) {
  EXPECT_EQ(rank_of_subset(gadget_chromatic_rank(kP3).dfa(), *gadget_chromatic_rank(kP3).subset).rank, 2u);
  const GadgetBundle e = gadget_chromatic_rank(edgeless(3));
  EXPECT_EQ(rank_of_subset(e.dfa(), *e.subset).rank, 1u);
  const GadgetBundle k = gadget_chromatic_rank(kK3);
  EXPECT_EQ(rank_of_subset(k.dfa(), *k.subset).rank, 3u);
  EXPECT_EQ(k.table().n_states(), 3u * 7u);
  EXPECT_EQ(k.table().letter_name(3), "nu");
  EXPECT_TRUE(is_weakly_acyclic(k.table()));
}

TEST(ChromaticRankBinary, Examples) {
  const GadgetBundle p3 = gadget_chromatic_rank_binary(kP3);
  EXPECT_EQ(p3.table().n_states(), 57u);
  EXPECT_EQ(rank_of_subset(p3.dfa(), *p3.subset).rank, 2u);
  const GadgetBundle e = gadget_chromatic_rank_binary(edgeless(2));
  EXPECT_EQ(rank_of_subset(e.dfa(), *e.subset).rank, 1u);
  const GadgetBundle k = gadget_chromatic_rank_binary(kK3);
  EXPECT_EQ(rank_of_subset(k.dfa(), *k.subset).rank, 3u);
  EXPECT_TRUE(is_weakly_acyclic(k.table()));
}

TEST(SatSubsetSync, Examples) {
  const GadgetBundle b = gadget_sat_subset_sync(CnfFormula(2, {{1, -2}, {2}}));
  EXPECT_EQ(b.table().n_states(), 2u * 3u + 1u);
  const SyncResult r = subset_shortest_sync_word(b.dfa(), *b.subset);
  ASSERT_TRUE(r.synchronizing);
  EXPECT_EQ(render_word(b.table(), *r.witness), "11");
  EXPECT_TRUE(is_weakly_acyclic(b.table()));

  const GadgetBundle u = gadget_sat_subset_sync(CnfFormula(1, {{1}, {-1}}));
  EXPECT_FALSE(subset_shortest_sync_word(u.dfa(), *u.subset).synchronizing);
  EXPECT_EQ(u.expected.at("sat"), 0);

  // One clause: the subset is a single state, so the empty word suffices.
  const GadgetBundle one = gadget_sat_subset_sync(CnfFormula(1, {{1}}));
  EXPECT_EQ(one.subset->size(), 1u);
  EXPECT_TRUE(subset_shortest_sync_word(one.dfa(), *one.subset).witness->empty());
  EXPECT_EQ(b.subset->size(), 2u);
}

TEST(SatIntersection, AcceptorsAreTotalAndWeaklyAcyclic) {
  const IntersectionGadget g = gadget_sat_intersection(CnfFormula(3, {{1, 2}, {-2, 3}, {-1}}));
  ASSERT_EQ(g.acceptors.size(), 3u);
  for (const auto& a : g.acceptors) {
    EXPECT_EQ(a.automaton.n_states(), 3u + 2u);
    EXPECT_TRUE(is_weakly_acyclic(a.automaton));
    EXPECT_EQ(a.accepting.size(), 1u);
  }
}

TEST(ABase, ClauseX1) {
  const GadgetBundle b = build_a_base(CnfFormula(1, {{1}}));
  const PartialDfa& a = b.partial();
  EXPECT_EQ(a.n_states(), 4u);
  auto id = [&](const char* n) { return *a.find_state(n); };
  EXPECT_EQ(a.at(id("y1^1"), 1), id("z2^1"));
  EXPECT_EQ(a.at(id("y1^1"), 0), id("y2^1"));
  EXPECT_EQ(a.at(id("z2^1"), 0), id("f"));
  EXPECT_EQ(a.at(id("z2^1"), 1), id("f"));
  EXPECT_FALSE(a.defined(id("y2^1"), 0));
  EXPECT_FALSE(a.defined(id("y2^1"), 1));
}

TEST(ABase, ZTrackStartsAfterSmallestVariable) {
  const GadgetBundle b = build_a_base(CnfFormula(3, {{2, 3}}));
  EXPECT_FALSE(b.table().find_state("z2^1"));
  EXPECT_TRUE(b.table().find_state("z3^1"));
  EXPECT_TRUE(b.table().find_state("z4^1"));
}

TEST(SatCareful, Examples) {
  const GadgetBundle b = gadget_sat_careful(CnfFormula(1, {{1}}));
  EXPECT_EQ(b.table().n_letters(), 3u);
  EXPECT_EQ(b.table().letter_name(2), "r");
  const Assignment x1{{true}};
  EXPECT_EQ(render_word(b.table(), careful_witness_word(x1)), "r10");
}

TEST(SatReachability, CompletedAndWeaklyAcyclic) {
  naive::Gen g(61);
  for (std::uint64_t s = 0; s < 40; ++s) {
    const CnfFormula f = gen_random_cnf(1 + s % 4, 1 + s % 3, 2, s);
    const GadgetBundle b = gadget_sat_reachability(f);
    EXPECT_FALSE(b.is_partial());
    EXPECT_TRUE(is_weakly_acyclic(b.table()));
  }
}

TEST(SatMatrices, ClauseX1) {
  const MatrixGadget g = gadget_sat_matrices(CnfFormula(1, {{1}}));
  ASSERT_EQ(g.matrices.size(), 4u);
  EXPECT_EQ(g.matrix_names, (std::vector<std::string>{"0", "1", "r", "spread"}));
  BoolMatrix p = bool_mul(bool_mul(bool_mul(g.matrices[2], g.matrices[1]), g.matrices[0]), g.matrices[3]);
  EXPECT_TRUE(p.is_all_ones());
  EXPECT_TRUE(is_triangular(g.matrices[0], Orientation::kUpper));
  EXPECT_TRUE(is_triangular(g.matrices[1], Orientation::kUpper));
  EXPECT_TRUE(is_triangular(g.matrices[2], Orientation::kLower));
  EXPECT_TRUE(is_triangular(g.matrices[3], Orientation::kLower));
}

TEST(SatMatrices, CanonicalOrder) {
  const MatrixGadget g = gadget_sat_matrices(CnfFormula(2, {{1, 2}, {-2}}));
  EXPECT_EQ(g.state_names.front(), "y1^1");
  EXPECT_EQ(g.state_names[1], "s^1");
  EXPECT_EQ(g.state_names.back(), "f");
}

TEST(GadgetProperty, SatReductionsAgreeWithOracle) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const CnfFormula f = gen_random_cnf(1 + s % 3, 1 + (s / 3) % 3, 1 + s % 2, s);
    const bool sat = sat_solve_brute(f).has_value();
    SCOPED_TRACE(s);
    const GadgetBundle sub = gadget_sat_subset_sync(f);
    EXPECT_EQ(subset_shortest_sync_word(sub.dfa(), *sub.subset).synchronizing, sat);
    EXPECT_EQ(careful_shortest_word(gadget_sat_careful(f).partial()).synchronizing, sat);
    EXPECT_EQ(intersection_nonempty(gadget_sat_intersection(f).acceptors).nonempty, sat);
    const GadgetBundle reach = gadget_sat_reachability(f);
    EXPECT_EQ(is_subset_reachable(reach.dfa(), *reach.target_set).reachable, sat);
    const PositiveProductResult pos = positive_product_search(gadget_sat_matrices(f).matrices);
    ASSERT_NE(pos.outcome, ProductOutcome::kInconclusive);
    EXPECT_EQ(pos.outcome == ProductOutcome::kFound, sat);
  }
}

TEST(GadgetProperty, Determinism) {
  const CnfFormula f(3, {{1, -3}, {2}, {-1, -2, 3}});
  EXPECT_EQ(serialize_dfa(gadget_sat_careful(f).automaton), serialize_dfa(gadget_sat_careful(f).automaton));
  EXPECT_EQ(bundle_sidecar(gadget_sat_careful(f)).dump(), bundle_sidecar(gadget_sat_careful(f)).dump());
  EXPECT_EQ(gadget_chromatic_rank_binary(kP3).source.instance_digest,
            gadget_chromatic_rank_binary(kP3).source.instance_digest);
  EXPECT_NE(gadget_chromatic_rank(kP3).source.instance_digest, gadget_chromatic_rank(kK3).source.instance_digest);
}

TEST(Digest, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(BundleIo, SidecarAndFiles) {
  const GadgetBundle b = family_subset_binary(5, 3);
  const auto j = bundle_sidecar(b);
  EXPECT_EQ(j.at("gadget"), "family-fig1");
  EXPECT_EQ(j.at("schema_version"), kBundleSchemaVersion);
  EXPECT_EQ(j.at("subset_names"), (std::vector<std::string>{"q1", "q2", "s2"}));
  EXPECT_EQ(j.at("expected").at("shortest_length"), 4);

  const auto dir = std::filesystem::temp_directory_path() / "wasync_bundle_test";
  std::filesystem::create_directories(dir);
  write_bundle(b, (dir / "family").string());
  EXPECT_EQ(read_text_file((dir / "family.dfa").string()), serialize_dfa(b.automaton));
  EXPECT_EQ(nlohmann::json::parse(read_text_file((dir / "family.json").string())), j);

  const IntersectionGadget g = gadget_sat_intersection(CnfFormula(2, {{1}, {-2}}));
  write_bundle(g, (dir / "inter").string());
  const Acceptor back = parse_acceptor(read_text_file((dir / "inter.2.acc").string()));
  EXPECT_EQ(serialize_dfa(back.automaton), serialize_dfa(g.acceptors[1].automaton));
  EXPECT_EQ(back.initial, g.acceptors[1].initial);
  EXPECT_EQ(back.accepting, g.acceptors[1].accepting);
  std::filesystem::remove_all(dir);
}
