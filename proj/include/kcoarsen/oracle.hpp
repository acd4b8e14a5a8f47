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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kcoarsen/graph.hpp"
#include "kcoarsen/parallel.hpp"

namespace kcoarsen {

enum class GreedyRule { kDegree, kWeight };

std::string_view to_string(GreedyRule rule);

/// Sequential greedy MWIS: repeatedly take the node maximizing
/// x_v / (deg(v) + 1) (kDegree) or x_v / sum_{u in N[v]} x_u (kWeight) on
/// the surviving subgraph, then delete its closed neighborhood. Scores are
/// recomputed after every deletion; ties go to the smaller node id.
std::vector<NodeId> sequential_greedy_mwis(const Graph& g, const NodeWeights& x, GreedyRule rule);

inline constexpr NodeId kExactMwisNodeCap = 24;

struct ExactMwis {
  std::vector<NodeId> selected;
  double alpha = 0.0;
};

/// Optimal independent set by branch and bound. Throws GraphError for
/// graphs with more than kExactMwisNodeCap nodes.
ExactMwis exact_mwis(const Graph& g, const NodeWeights& x);

double total_weight(const NodeWeights& x, const std::vector<NodeId>& nodes);

/// max_v [(A + I)^k 1]_v
double delta_k(const Graph& g, unsigned k);

/// Lower bound on the k-MIS weight guaranteed for the matching rule:
/// sum_v w(v) for kDegree, sum_v w(v) x_v for kWeight.
double greedy_bound_rhs(const Graph& g, const NodeWeights& x, unsigned k, GreedyRule rule);

/// Relative slack used when comparing a weight against a floating-point
/// lower bound; the bounds can hold with equality (e.g. edgeless graphs).
inline constexpr double kBoundRelativeTolerance = 1e-12;

inline bool at_least(double lhs, double rhs) {
  return lhs >= rhs - kBoundRelativeTolerance * std::max(1.0, std::abs(rhs));
}

struct OracleTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<double> greedy_weight;  // absent when the power graph was refused
  double ours_weight = 0.0;
  double bound_rhs = 0.0;               // rule lower bound
  std::optional<double> exact_alpha;    // MWIS weight of g, tiny graphs only
  std::optional<double> ratio_rhs;      // exact_alpha / delta_k
  bool bound_ok = true;
  bool ratio_ok = true;
};

struct OracleReport {
  std::string graph_name;
  unsigned k = 0;
  GreedyRule rule = GreedyRule::kDegree;
  double delta_k = 0.0;
  std::vector<OracleTrial> trials;
  std::string note;  // e.g. why the greedy column is missing

  double mean_ours() const;
  std::optional<double> mean_greedy() const;
  bool ok() const;
};

struct CompareOptions {
  std::size_t trials = 10;
  double weight_min = 1.0;
  double weight_max = 100.0;
  std::uint64_t seed = 0;
  NodeId power_node_cap = kDefaultPowerNodeCap;
  bool run_greedy = true;
  Parallelism par;
};

/// Draws uniform node weights in [lo, hi) from `seed`.
NodeWeights random_node_weights(NodeId n, double lo, double hi, std::uint64_t seed);

/// Weight comparison between sequential greedy on the explicit k-th power
/// (with the k = 1 rule) and the k-MIS pipeline ranked by the k-rule, over
/// seeded random weight draws. Checks the rule lower bound every trial and
/// the alpha / delta_k ratio when the graph is small enough for exact_mwis.
OracleReport compare(const Graph& g, unsigned k, GreedyRule rule, const CompareOptions& options,
                     std::string graph_name = "graph");

/// CSV: graph,k,rule,trial,seed,greedy_weight,ours_weight,bound_rhs,ratio_rhs
void write_oracle_csv(std::ostream& out, const std::vector<OracleReport>& reports,
                      bool with_header = true);

}  // namespace kcoarsen
