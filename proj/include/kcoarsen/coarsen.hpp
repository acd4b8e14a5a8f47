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

#include <optional>
#include <string_view>
#include <vector>

#include "kcoarsen/graph.hpp"
#include "kcoarsen/kmis.hpp"
#include "kcoarsen/parallel.hpp"
#include "kcoarsen/ranking.hpp"

namespace kcoarsen {

/// Node-to-centroid assignment. assignment[v] is the centroid (an original
/// node id) of v's cluster; centroids are listed in ascending id order.
struct Partition {
  std::vector<NodeId> assignment;
  std::vector<NodeId> centroids;

  std::size_t cluster_count() const { return centroids.size(); }
};

enum class EdgeAggregation { kSum, kMax, kMin, kMean };
enum class NodeAggregation { kKeepCentroid, kSum, kMean };

EdgeAggregation parse_edge_aggregation(std::string_view name);
NodeAggregation parse_node_aggregation(std::string_view name);
std::string_view to_string(EdgeAggregation agg);
std::string_view to_string(NodeAggregation agg);

struct AggregationSpec {
  EdgeAggregation edges = EdgeAggregation::kSum;
  NodeAggregation nodes = NodeAggregation::kKeepCentroid;
  /// Keep the aggregated weight of intra-cluster edges as a per-cluster value.
  bool keep_internal_weight = false;
};

/// Graph over the centroids. Coarse node i stands for centroid centroids[i].
struct CoarsenedGraph {
  Graph graph;
  std::vector<NodeId> centroids;            // coarse index -> original node id
  std::vector<NodeId> coarse_of;            // original node -> coarse index
  std::optional<std::vector<double>> node_values;
  std::optional<std::vector<double>> internal_weight;
  Partition partition;
};

/// Assigns every node to the best-ranked centroid within k hops: centroids
/// start with their rank position as label, everything else unlabeled, and
/// k steps of minimum propagation follow. Throws std::invalid_argument when
/// some node ends up without a centroid (s is not maximal for g and k).
Partition cluster(const Graph& g, unsigned k, const Ranking& pi, const KMisResult& s,
                  const Parallelism& par = {});

/// Identity partition: every node is its own centroid.
Partition identity_partition(NodeId n);

/// Contracts each cluster onto its centroid. Every edge crossing two
/// clusters contributes its weight (1 if unweighted) to the coarse edge
/// between their centroids; contributions merge with `spec.edges`.
/// Intra-cluster edges are dropped. `node_values`, when given, are reduced
/// per cluster with `spec.nodes`.
CoarsenedGraph reduce(const Graph& g, const Partition& p, const AggregationSpec& spec = {},
                      const std::vector<double>* node_values = nullptr);

struct PhaseTimes {
  double ranking_s = 0.0;
  double kmis_s = 0.0;
  double reduce_s = 0.0;
};

struct PipelineResult {
  CoarsenedGraph coarse;
  KMisResult mis;
  Ranking ranking;
  PhaseTimes times;
};

/// rank -> k_mis -> cluster -> reduce. For k == 0 the graph is returned
/// unchanged with the identity partition. `x` feeds the rule-based rankings
/// (all ones when absent); `node_values` feed node aggregation.
PipelineResult coarsen_pipeline(const Graph& g, unsigned k, const RankingSpec& ranking,
                                const AggregationSpec& aggregation,
                                const NodeWeights* x = nullptr,
                                const std::vector<double>* node_values = nullptr,
                                const Parallelism& par = {});

}  // namespace kcoarsen
