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

// Randomized properties across the whole pipeline.

#include <gtest/gtest.h>

#include <random>

#include "kcoarsen/coarsen.hpp"
#include "kcoarsen/kmis.hpp"
#include "kcoarsen/oracle.hpp"
#include "kcoarsen/verify.hpp"
#include "support.hpp"

namespace kcoarsen {
namespace {

Parallelism workers(unsigned w) {
  Parallelism p;
  p.workers = w;
  return p;
}

TEST(Property, WorkerCountNeverChangesResults) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = testing::random_graph(120, 0.03, rng);
    const NodeWeights x(testing::random_weights(120, 1, 100, rng));
    for (unsigned k = 1; k <= 3; ++k) {
      const RankingSpec spec{RankingKind::kWeightRule, 0, {}};
      const auto base = coarsen_pipeline(g, k, spec, {}, &x, nullptr, workers(1));
      for (const unsigned w : {2u, 8u}) {
        const auto other = coarsen_pipeline(g, k, spec, {}, &x, nullptr, workers(w));
        EXPECT_EQ(other.mis.selected, base.mis.selected);
        EXPECT_EQ(other.mis.rounds, base.mis.rounds);
        EXPECT_EQ(other.coarse.partition.assignment, base.coarse.partition.assignment);
        EXPECT_EQ(other.coarse.graph, base.coarse.graph);
      }
    }
  }
}

TEST(Property, RelabelingCommutesWithKMis) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    const NodeId n = 10 + static_cast<NodeId>(rng() % 60);
    const auto g = testing::random_graph(n, 0.08, rng);
    const auto pi = rank_random(n, rng());
    const auto sigma = testing::random_permutation(n, rng);
    const auto g2 = permute(g, sigma);
    const auto pi2 = pi.relabel(sigma);
    for (unsigned k = 1; k <= 3; ++k) {
      const auto s = k_mis(g, k, pi);
      std::vector<NodeId> mapped;
      for (const NodeId v : s.selected) mapped.push_back(sigma[v]);
      std::sort(mapped.begin(), mapped.end());
      EXPECT_EQ(k_mis(g2, k, pi2).selected, mapped);
      const auto p = cluster(g, k, pi, s);
      const auto p2 = cluster(g2, k, pi2, k_mis(g2, k, pi2));
      for (NodeId v = 0; v < n; ++v) EXPECT_EQ(p2.assignment[sigma[v]], sigma[p.assignment[v]]);
    }
  }
}

TEST(Property, PipelineSatisfiesAllChecks) {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = trial % 3 == 0 ? testing::random_disconnected_graph(3, 15, 0.15, rng)
                                   : testing::random_graph(50, 0.06, rng);
    for (unsigned k = 1; k <= 4; ++k) {
      const auto r = coarsen_pipeline(g, k, {RankingKind::kRandom, rng(), {}}, {});
      EXPECT_TRUE(check_kmis_validity(g, k, r.mis.selected).ok());
      EXPECT_TRUE(check_partition(g, k, r.coarse.partition).ok());
      EXPECT_TRUE(check_edge_bounds(g, r.coarse, k).ok());
      EXPECT_TRUE(check_distortion(g, r.coarse, k).ok());
      EXPECT_TRUE(check_components(g, r.coarse).ok());
    }
  }
}

TEST(Property, RuleBoundsHold) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    const NodeId n = 5 + static_cast<NodeId>(rng() % 60);
    const auto g = testing::random_graph(n, 0.1, rng);
    const NodeWeights x(testing::random_weights(n, 1, 100, rng));
    for (unsigned k = 1; k <= 3; ++k) {
      const auto deg = k_mis(g, k, rank_by_degree_rule(g, x, k));
      EXPECT_TRUE(at_least(total_weight(x, deg.selected),
                           greedy_bound_rhs(g, x, k, GreedyRule::kDegree)));
      const auto wt = k_mis(g, k, rank_by_weight_rule(g, x, k));
      EXPECT_TRUE(at_least(total_weight(x, wt.selected),
                           greedy_bound_rhs(g, x, k, GreedyRule::kWeight)));
    }
  }
}

}  // namespace
}  // namespace kcoarsen
