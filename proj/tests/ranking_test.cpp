// Copyright 2026 The kcoarsen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kcoarsen/ranking.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace kcoarsen {
namespace {

std::vector<NodeId> as_vector(std::span<const NodeId> s) { return {s.begin(), s.end()}; }

TEST(WalkCounts, PathOfThree) {
  const auto g = testing::path_graph(3);
  const std::vector<double> ones(3, 1.0);
  EXPECT_EQ(walk_counts(g, ones, 1), (std::vector<double>{2, 3, 2}));
  EXPECT_EQ(walk_counts(g, ones, 2), (std::vector<double>{5, 7, 5}));
  EXPECT_EQ(walk_counts(g, ones, 0), ones);
}

TEST(WalkCounts, MatchesDenseProductAndIgnoresEdgeWeights) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto base = testing::random_graph(30, 0.15, rng);
    std::vector<EdgeInput> edges;
    for (const auto& e : base.edges()) edges.push_back({e.u, e.v, 7.0});
    const auto g = Graph::build(30, edges);
    const auto x = testing::random_weights(30, 1.0, 100.0, rng);
    for (unsigned k = 0; k <= 4; ++k) {
      const auto got = walk_counts(g, x, k);
      const auto want = testing::dense_walk_counts(base, x, k);
      for (NodeId v = 0; v < 30; ++v) EXPECT_NEAR(got[v], want[v], 1e-9 * want[v]);
    }
  }
}

TEST(WalkCounts, OverestimatesKHopSums) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = testing::random_graph(25, 0.12, rng);
    const auto hops = testing::all_pairs_hops(g);
    const auto x = testing::random_weights(25, 1.0, 100.0, rng);
    for (unsigned k = 1; k <= 4; ++k) {
      const auto c = walk_counts(g, x, k);
      for (NodeId v = 0; v < 25; ++v) {
        double ball = 0.0;
        for (NodeId u = 0; u < 25; ++u) {
          if (hops[v][u] <= k) ball += x[u];
        }
        if (k == 1) {
          EXPECT_NEAR(c[v], ball, 1e-9 * ball);
        } else {
          EXPECT_GE(c[v], ball * (1 - 1e-12));
        }
      }
    }
  }
}

TEST(WalkCounts, RejectsLengthMismatch) {
  const std::vector<double> x(2, 1.0);
  EXPECT_THROW(walk_counts(testing::path_graph(3), x, 1), std::invalid_argument);
}

TEST(DegreeRule, StarLeavesBeforeCenter) {
  const auto g = testing::star_graph(3);
  const auto w = degree_rule_scores(g, NodeWeights::ones(4), 1);
  EXPECT_DOUBLE_EQ(w[0], 0.25);
  for (NodeId v = 1; v < 4; ++v) EXPECT_DOUBLE_EQ(w[v], 0.5);
  const auto pi = rank_by_degree_rule(g, NodeWeights::ones(4), 1);
  EXPECT_EQ(as_vector(pi.order()), (std::vector<NodeId>{1, 2, 3, 0}));
}

TEST(DegreeRule, RegularGraphFallsBackToNodeIds) {
  const auto pi = rank_by_degree_rule(testing::cycle_graph(6), NodeWeights::ones(6), 2);
  EXPECT_EQ(as_vector(pi.order()), (std::vector<NodeId>{0, 1, 2, 3, 4, 5}));
}

TEST(DegreeRule, HeavyEndpointsFirst) {
  const NodeWeights x({9, 1, 9});
  const auto w = degree_rule_scores(testing::path_graph(3), x, 1);
  EXPECT_DOUBLE_EQ(w[0], 4.5);
  EXPECT_DOUBLE_EQ(w[1], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(w[2], 4.5);
  EXPECT_EQ(as_vector(rank_by_degree_rule(testing::path_graph(3), x, 1).order()),
            (std::vector<NodeId>{0, 2, 1}));
}

TEST(WeightRule, PathOfThree) {
  const auto w = weight_rule_scores(testing::path_graph(3), NodeWeights::ones(3), 1);
  EXPECT_DOUBLE_EQ(w[0], 0.5);
  EXPECT_DOUBLE_EQ(w[1], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(w[2], 0.5);
}

TEST(WeightRule, IsolatedNodeScoresOne) {
  const auto g = Graph::build(2, {});
  const auto w = weight_rule_scores(g, NodeWeights({3.0, 0.25}), 3);
  EXPECT_DOUBLE_EQ(w[0], 1.0);
  EXPECT_DOUBLE_EQ(w[1], 1.0);
}

TEST(WeightRule, HeavyStarCenterFirst) {
  const auto g = testing::star_graph(3);
  const NodeWeights x({10, 1, 1, 1});
  const auto w = weight_rule_scores(g, x, 1);
  EXPECT_DOUBLE_EQ(w[0], 10.0 / 13.0);
  EXPECT_DOUBLE_EQ(w[1], 1.0 / 11.0);
  EXPECT_EQ(rank_by_weight_rule(g, x, 1).order()[0], 0u);
}

TEST(Ranking, SimpleRankings) {
  EXPECT_EQ(as_vector(rank_by_node_id(3).order()), (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(as_vector(rank_constant(4).order()), (std::vector<NodeId>{0, 1, 2, 3}));
  const std::vector<double> scores{1.0, 3.0, 3.0, 2.0};
  EXPECT_EQ(as_vector(rank_by_scores(scores).order()), (std::vector<NodeId>{1, 2, 3, 0}));
}

TEST(Ranking, RandomIsSeeded) {
  const auto a = rank_random(100, 42);
  const auto b = rank_random(100, 42);
  const auto c = rank_random(100, 43);
  EXPECT_EQ(as_vector(a.order()), as_vector(b.order()));
  EXPECT_NE(as_vector(a.order()), as_vector(c.order()));
}

TEST(Ranking, PositionsInvertOrder) {
  const auto pi = rank_random(50, 1);
  for (NodeId i = 0; i < 50; ++i) EXPECT_EQ(pi.positions()[pi.order()[i]], i);
}

TEST(Ranking, RejectsDuplicateAndNanKeys) {
  EXPECT_THROW(Ranking({{1.0, 0}, {1.0, 0}}), std::invalid_argument);
  EXPECT_THROW(Ranking({{std::nan(""), 0}}), std::invalid_argument);
  EXPECT_THROW(rank_by_degree_rule(testing::path_graph(3), NodeWeights::ones(3), 0),
               std::invalid_argument);
}

TEST(Ranking, RelabelMovesKeysWithNodes) {
  const auto pi = rank_random(20, 9);
  std::mt19937_64 rng(9);
  const auto perm = testing::random_permutation(20, rng);
  const auto moved = pi.relabel(perm);
  for (NodeId v = 0; v < 20; ++v) EXPECT_EQ(moved.key(perm[v]), pi.key(v));
}

TEST(RankingSpec, Parses) {
  std::string path;
  EXPECT_EQ(parse_ranking_spec("kdeg").kind, RankingKind::kDegreeRule);
  EXPECT_EQ(parse_ranking_spec("kweight").kind, RankingKind::kWeightRule);
  EXPECT_EQ(parse_ranking_spec("random").kind, RankingKind::kRandom);
  EXPECT_EQ(parse_ranking_spec("file:/tmp/s.txt", &path).kind, RankingKind::kExternal);
  EXPECT_EQ(path, "/tmp/s.txt");
  EXPECT_THROW(parse_ranking_spec("pagerank"), std::invalid_argument);
}

}  // namespace
}  // namespace kcoarsen
