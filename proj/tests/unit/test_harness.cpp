#include <gtest/gtest.h>

#include "wasync/core/dfa_io.hpp"
#include "wasync/core/error.hpp"
#include "wasync/core/structure.hpp"
#include "wasync/engines/rank.hpp"
#include "wasync/harness/generators.hpp"
#include "wasync/harness/runner.hpp"

using namespace wasync;

TEST(Generators, SeedStable) {
  EXPECT_EQ(gen_random_weakly_acyclic(8, 2, 1), gen_random_weakly_acyclic(8, 2, 1));
  EXPECT_EQ(gen_random_dfa(8, 2, 9), gen_random_dfa(8, 2, 9));
  EXPECT_EQ(gen_random_graph(6, 0.5, 3), gen_random_graph(6, 0.5, 3));
  EXPECT_EQ(gen_random_cnf(4, 5, 3, 3), gen_random_cnf(4, 5, 3, 3));
  EXPECT_EQ(gen_random_subset(10, 4, 2), gen_random_subset(10, 4, 2));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Generators, WeaklyAcyclicRankEqualsSinkCount) {
  const Dfa a = gen_random_weakly_acyclic(8, 2, 1);
  EXPECT_TRUE(is_weakly_acyclic(a));
  EXPECT_EQ(rank_of_automaton(a, RankMode::kExact).rank, sink_states(a).size());
}

TEST(Generators, Shapes) {
  EXPECT_EQ(gen_random_subset(10, 4, 2).size(), 4u);
  const CnfFormula f = gen_random_cnf(3, 6, 5, 7);
  for (const auto& c : f.clauses()) EXPECT_EQ(c.size(), 3u);
  for (std::uint64_t s = 0; s < 50; ++s) EXPECT_TRUE(is_strongly_connected(gen_random_eulerian_connected(5, 2, s)));
  EXPECT_FALSE(is_strongly_connected(Dfa::identity(2, 1)));
}

TEST(Report, Classify) {
  EXPECT_EQ(classify("a", "a", true), RecordStatus::kPass);
  EXPECT_EQ(classify("a", "b", true), RecordStatus::kFail);
  EXPECT_EQ(classify("a", "b", false), RecordStatus::kInconclusive);
}

TEST(Runner, UnknownCampaign) {
  EXPECT_THROW(run_campaign("no-such-campaign", {}), InputError);
  EXPECT_EQ(find_campaign("no-such-campaign"), nullptr);
  EXPECT_GE(campaign_registry().size(), 20u);
}

TEST(Runner, ResourceErrorIsInconclusiveOtherErrorsFail) {
  std::vector<InstanceTask> tasks{
      {"ok", [] { return InstanceOutcome{"d1", "x", "x"}; }},
      {"bad", [] { return InstanceOutcome{"d2", "x", "y"}; }},
      {"res", []() -> InstanceOutcome { throw ResourceError("cap", 1); }},
      {"boom", []() -> InstanceOutcome { throw std::runtime_error("boom"); }},
  };
  const VerificationReport r = run_tasks("unit", {}, tasks);
  EXPECT_EQ(r.passed, 1u);
  EXPECT_EQ(r.failed, 2u);
  EXPECT_EQ(r.inconclusive, 1u);
  EXPECT_FALSE(r.ok());
}

TEST(Runner, ReportInvariants) {
  CampaignParams params;
  params.seed = 7;
  params.count = 50;
  for (const char* name : {"chromatic-rank", "bound-prop1", "engine-oracle"}) {
    const VerificationReport r = run_campaign(name, params);
    SCOPED_TRACE(name);
    EXPECT_EQ(r.passed + r.failed + r.inconclusive, r.records.size());
    EXPECT_EQ(r.instance_count, r.records.size());
    EXPECT_TRUE(r.ok());
    for (std::size_t i = 0; i < r.records.size(); ++i) {
      const auto& rec = r.records[i];
      EXPECT_EQ(rec.status == RecordStatus::kFail,
                rec.status != RecordStatus::kInconclusive && rec.expected != rec.computed);
      if (i > 0) {
        const auto& prev = r.records[i - 1];
        EXPECT_LE(std::tie(prev.instance_digest, prev.label), std::tie(rec.instance_digest, rec.label));
      }
    }
  }
}

TEST(Runner, SerialAndParallelReportsIdentical) {
  CampaignParams params;
  params.seed = 3;
  params.count = 60;
  for (const char* name : {"bound-prop1", "sat-subset-sync", "is-maxsync-large"}) {
    const std::string par = report_to_json(run_campaign(name, params), false).dump();
    params.serial = true;
    const std::string ser = report_to_json(run_campaign(name, params), false).dump();
    params.serial = false;
    EXPECT_EQ(par, ser) << name;
    EXPECT_EQ(par, report_to_json(run_campaign(name, params), false).dump()) << name;
  }
}

TEST(Runner, JsonShape) {
  CampaignParams params;
  params.count = 5;
  const auto j = report_to_json(run_campaign("unary-maxsync", params), false);
  EXPECT_EQ(j.at("schema_version"), kReportSchemaVersion);
  EXPECT_EQ(j.at("campaign"), "unary-maxsync");
  EXPECT_FALSE(j.contains("wall_millis"));
  EXPECT_TRUE(report_to_json(run_campaign("unary-maxsync", params)).contains("wall_millis"));
}

TEST(SearchLimitsEnv, ParseForms) {
  EXPECT_EQ(SearchLimits::parse("100").visited_budget, 100u);
  const SearchLimits l = SearchLimits::parse("visited=50,states=10");
  EXPECT_EQ(l.visited_budget, 50u);
  EXPECT_EQ(l.state_cap, 10u);
  EXPECT_THROW(SearchLimits::parse("bogus=1"), InputError);
}
