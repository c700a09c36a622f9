#include <gtest/gtest.h>

#include <random>

#include "letternet/diagnostics.h"
#include "letternet/prune.h"
#include "oracles.h"
#include "test_support.h"

namespace letternet {
namespace {

constexpr PosClass N = PosClass::NOUN;

LexicalGraph chain(const std::vector<std::uint64_t>& node_freqs,
                   const std::vector<std::uint64_t>& edge_weights) {
  LexicalGraph g;
  for (std::size_t i = 0; i < node_freqs.size(); ++i) {
    g.add_node({"n" + std::to_string(i), N}, node_freqs[i]);
  }
  for (std::size_t i = 0; i < edge_weights.size(); ++i) {
    g.add_edge({{"n" + std::to_string(i), N}, {"n" + std::to_string(i + 1), N},
                RelationKind::COOCCUR},
               edge_weights[i]);
  }
  return g;
}

TEST(Summarize, PopulationStatistics) {
  const std::vector<std::uint64_t> v = {3, 2, 1};
  const auto s = summarize(v);
  EXPECT_EQ(s.count, 3u);
  EXPECT_EQ(s.min, 1u);
  EXPECT_EQ(s.max, 3u);
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_NEAR(s.sd, std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(s.sd, 0.8165, 1e-4);
}

TEST(Summarize, EmptyIsZero) {
  const auto s = summarize({});
  EXPECT_EQ(s.count, 0u);
  EXPECT_EQ(s.mean, 0.0);
  EXPECT_EQ(s.sd, 0.0);
}

TEST(Prune, MeanSdNodes) {
  const LexicalGraph g = chain({5, 1, 1, 1}, {});
  const auto cutoff = PruneRule::mean_sd(1).cutoff(std::vector<std::uint64_t>{5, 1, 1, 1});
  EXPECT_NEAR(cutoff.value(), 2.0 + std::sqrt(3.0), 1e-12);
  const LexicalGraph p = prune(g, {PruneRule::mean_sd(1), PruneRule::threshold(0), false});
  ASSERT_EQ(p.node_count(), 1u);
  EXPECT_EQ(p.frequency({"n0", N}), 5u);
}

TEST(Prune, ThresholdEdgesIsStrict) {
  const LexicalGraph g = chain({1, 1, 1, 1}, {3, 2, 1});
  const LexicalGraph p = prune(g, {PruneRule::threshold(0), PruneRule::threshold(2), true});
  ASSERT_EQ(p.edge_count(), 1u);
  EXPECT_EQ(p.edges().begin()->second, 3u);
  EXPECT_EQ(p.node_count(), 2u);
}

TEST(Prune, ZeroThresholdIsIdentity) {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const LexicalGraph g = testing::random_graph(rng, 30);
    EXPECT_EQ(prune(g, {PruneRule::threshold(0), PruneRule::threshold(0), false}), g);
  }
}

TEST(Prune, EdgesNeedBothEndpoints) {
  const LexicalGraph g = chain({9, 1, 9}, {5, 5});
  const LexicalGraph p = prune(g, {PruneRule::threshold(1), PruneRule::threshold(0), false});
  EXPECT_EQ(p.node_count(), 2u);
  EXPECT_EQ(p.edge_count(), 0u);
  const LexicalGraph q = prune(g, {PruneRule::threshold(1), PruneRule::threshold(0), true});
  EXPECT_TRUE(q.empty());
}

TEST(Prune, UniformDistributionKeepsNothingUnderMeanSd) {
  const LexicalGraph g = chain({4, 4, 4}, {2, 2});
  EXPECT_TRUE(prune(g, {PruneRule::mean_sd(0), PruneRule::threshold(0), false}).empty());
}

TEST(PruneRule, Parse) {
  EXPECT_EQ(PruneRule::parse("gt2").kind(), PruneRule::Kind::kThreshold);
  EXPECT_EQ(PruneRule::parse("gt2").parameter(), 2.0);
  EXPECT_EQ(PruneRule::parse("mean1.5").kind(), PruneRule::Kind::kMeanSd);
  EXPECT_EQ(PruneRule::parse("mean1.5").parameter(), 1.5);
  EXPECT_EQ(PruneRule::parse("mean2").to_string(), "mean2");
  EXPECT_EQ(PruneRule::parse("gt0").to_string(), "gt0");
  for (const std::string bad : {"", "gt", "gt-1", "mean", "mean-1", "meanx", "lt2", "gt1.5"}) {
    EXPECT_THROW(PruneRule::parse(bad), Error) << bad;
  }
  EXPECT_THROW(PruneRule::mean_sd(-0.5), std::invalid_argument);
}

std::vector<oracle::PlainRule> oracle_rules() {
  std::vector<oracle::PlainRule> rules;
  for (std::uint64_t m : {0u, 1u, 2u, 3u, 5u}) rules.push_back({false, m, 0});
  for (std::int64_t h : {0, 1, 2, 3, 4}) rules.push_back({true, 0, h});
  return rules;
}

PruneRule to_rule(const oracle::PlainRule& r) {
  return r.mean_sd ? PruneRule::mean_sd(static_cast<double>(r.half_k) / 2.0)
                   : PruneRule::threshold(r.threshold);
}

TEST(Prune, MatchesOracleOnRandomGraphs) {
  std::mt19937 rng(1662);
  const auto rules = oracle_rules();
  std::uniform_int_distribution<std::size_t> pick(0, rules.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const LexicalGraph g = testing::random_graph(rng, 50);
    const auto plain = oracle::to_plain(g);
    for (int j = 0; j < 10; ++j) {
      const auto& nr = rules[pick(rng)];
      const auto& er = rules[pick(rng)];
      for (bool drop : {true, false}) {
        const LexicalGraph p = prune(g, {to_rule(nr), to_rule(er), drop});
        EXPECT_EQ(oracle::to_plain(p), oracle::prune(plain, nr, er, drop)) << "graph " << i;
        EXPECT_TRUE(p.is_subgraph_of(g));
      }
    }
  }
}

TEST(Prune, Monotone) {
  std::mt19937 rng(1663);
  for (int i = 0; i < 200; ++i) {
    const LexicalGraph g = testing::random_graph(rng, 50);
    for (bool drop : {true, false}) {
      for (std::uint64_t m = 0; m < 5; ++m) {
        const auto loose = prune(g, {PruneRule::threshold(m), PruneRule::threshold(m), drop});
        const auto tight =
            prune(g, {PruneRule::threshold(m + 1), PruneRule::threshold(m + 1), drop});
        EXPECT_TRUE(tight.is_subgraph_of(loose));
      }
      for (double k = 0; k < 3; k += 0.5) {
        const auto loose = prune(g, {PruneRule::mean_sd(k), PruneRule::mean_sd(k), drop});
        const auto tight =
            prune(g, {PruneRule::mean_sd(k + 0.5), PruneRule::mean_sd(k + 0.5), drop});
        EXPECT_TRUE(tight.is_subgraph_of(loose));
      }
    }
  }
}

}  // namespace
}  // namespace letternet
