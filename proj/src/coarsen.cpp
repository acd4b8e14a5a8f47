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

#include "kcoarsen/coarsen.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kcoarsen {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CoarseContribution {
  NodeId a;
  NodeId b;
  double weight;
};

}  // namespace

EdgeAggregation parse_edge_aggregation(std::string_view name) {
  if (name == "sum") return EdgeAggregation::kSum;
  if (name == "max") return EdgeAggregation::kMax;
  if (name == "min") return EdgeAggregation::kMin;
  if (name == "mean") return EdgeAggregation::kMean;
  throw std::invalid_argument("unknown edge aggregation '" + std::string(name) + "'");
}

NodeAggregation parse_node_aggregation(std::string_view name) {
  if (name == "centroid" || name == "keep_centroid") return NodeAggregation::kKeepCentroid;
  if (name == "sum") return NodeAggregation::kSum;
  if (name == "mean") return NodeAggregation::kMean;
  throw std::invalid_argument("unknown node aggregation '" + std::string(name) + "'");
}

std::string_view to_string(EdgeAggregation agg) {
  switch (agg) {
    case EdgeAggregation::kSum: return "sum";
    case EdgeAggregation::kMax: return "max";
    case EdgeAggregation::kMin: return "min";
    case EdgeAggregation::kMean: return "mean";
  }
  return "unknown";
}

std::string_view to_string(NodeAggregation agg) {
  switch (agg) {
    case NodeAggregation::kKeepCentroid: return "centroid";
    case NodeAggregation::kSum: return "sum";
    case NodeAggregation::kMean: return "mean";
  }
  return "unknown";
}

Partition cluster(const Graph& g, unsigned k, const Ranking& pi, const KMisResult& s,
                  const Parallelism& par) {
  const NodeId n = g.num_nodes();
  if (pi.size() != n) throw std::invalid_argument("ranking size does not match graph");
  std::vector<std::uint8_t> is_centroid(n, 0);
  for (const NodeId c : s.selected) {
    if (c >= n) throw std::invalid_argument("centroid " + std::to_string(c) + " out of range");
    is_centroid[c] = 1;
  }

  const auto position = pi.positions();
  const auto order = pi.order();
  std::vector<NodeId> labels(n);
  std::vector<NodeId> scratch(n);
  for (NodeId v = 0; v < n; ++v) labels[v] = is_centroid[v] ? position[v] : kNoLabel;
  propagate_min_labels(g, labels, scratch, k, par);

  Partition p;
  p.assignment.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    if (labels[v] == kNoLabel) {
      throw std::invalid_argument("node " + std::to_string(v) + " has no centroid within " +
                                  std::to_string(k) + " hops");
    }
    p.assignment[v] = order[labels[v]];
  }
  for (NodeId v = 0; v < n; ++v) {
    if (is_centroid[v] && p.assignment[v] != v) {
      throw std::invalid_argument("centroid " + std::to_string(v) + " was captured by centroid " +
                                  std::to_string(p.assignment[v]) +
                                  "; the selected set is not k-independent");
    }
  }
  p.centroids.assign(s.selected.begin(), s.selected.end());
  std::sort(p.centroids.begin(), p.centroids.end());
  p.centroids.erase(std::unique(p.centroids.begin(), p.centroids.end()), p.centroids.end());
  return p;
}

Partition identity_partition(NodeId n) {
  Partition p;
  p.assignment.resize(n);
  std::iota(p.assignment.begin(), p.assignment.end(), NodeId{0});
  p.centroids = p.assignment;
  return p;
}

CoarsenedGraph reduce(const Graph& g, const Partition& p, const AggregationSpec& spec,
                      const std::vector<double>* node_values) {
  const NodeId n = g.num_nodes();
  if (p.assignment.size() != n) throw std::invalid_argument("partition size does not match graph");
  if (node_values && node_values->size() != n) {
    throw std::invalid_argument("node value vector size does not match graph");
  }

  CoarsenedGraph out;
  out.partition = p;
  out.centroids = p.centroids;
  const auto coarse_n = static_cast<NodeId>(out.centroids.size());
  std::vector<NodeId> index_of(n, kNoLabel);
  for (NodeId i = 0; i < coarse_n; ++i) index_of[out.centroids[i]] = i;
  out.coarse_of.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    const NodeId c = p.assignment[v];
    if (c >= n || index_of[c] == kNoLabel) {
      throw std::invalid_argument("node " + std::to_string(v) + " maps to non-centroid " +
                                  std::to_string(c));
    }
    out.coarse_of[v] = index_of[c];
  }

  std::vector<CoarseContribution> crossing;
  std::vector<double> internal(coarse_n, 0.0);
  for (const auto& e : g.edges()) {
    const NodeId a = out.coarse_of[e.u];
    const NodeId b = out.coarse_of[e.v];
    if (a == b) {
      internal[a] += e.weight;
    } else {
      crossing.push_back({std::min(a, b), std::max(a, b), e.weight});
    }
  }
  std::stable_sort(crossing.begin(), crossing.end(),
                   [](const CoarseContribution& x, const CoarseContribution& y) {
                     return x.a != y.a ? x.a < y.a : x.b < y.b;
                   });

  std::vector<Edge> coarse_edges;
  for (std::size_t i = 0; i < crossing.size();) {
    std::size_t j = i;
    double acc = crossing[i].weight;
    while (++j < crossing.size() && crossing[j].a == crossing[i].a &&
           crossing[j].b == crossing[i].b) {
      const double w = crossing[j].weight;
      switch (spec.edges) {
        case EdgeAggregation::kSum:
        case EdgeAggregation::kMean: acc += w; break;
        case EdgeAggregation::kMax: acc = std::max(acc, w); break;
        case EdgeAggregation::kMin: acc = std::min(acc, w); break;
      }
    }
    if (spec.edges == EdgeAggregation::kMean) acc /= static_cast<double>(j - i);
    coarse_edges.push_back({crossing[i].a, crossing[i].b, acc});
    i = j;
  }
  out.graph = Graph::from_edges(coarse_n, coarse_edges, true);
  if (spec.keep_internal_weight) out.internal_weight = std::move(internal);

  if (node_values) {
    std::vector<double> values(coarse_n, 0.0);
    std::vector<std::size_t> counts(coarse_n, 0);
    for (NodeId v = 0; v < n; ++v) {
      const NodeId c = out.coarse_of[v];
      switch (spec.nodes) {
        case NodeAggregation::kKeepCentroid:
          if (out.centroids[c] == v) values[c] = (*node_values)[v];
          break;
        case NodeAggregation::kSum:
        case NodeAggregation::kMean:
          values[c] += (*node_values)[v];
          ++counts[c];
          break;
      }
    }
    if (spec.nodes == NodeAggregation::kMean) {
      for (NodeId c = 0; c < coarse_n; ++c) values[c] /= static_cast<double>(counts[c]);
    }
    out.node_values = std::move(values);
  }
  return out;
}

PipelineResult coarsen_pipeline(const Graph& g, unsigned k, const RankingSpec& ranking,
                                const AggregationSpec& aggregation, const NodeWeights* x,
                                const std::vector<double>* node_values, const Parallelism& par) {
  const NodeId n = g.num_nodes();
  if (x && x->size() != n) throw std::invalid_argument("node weight size does not match graph");
  PipelineResult result;
  result.mis.k = k;

  if (k == 0) {
    result.ranking = rank_by_node_id(n);
    result.mis.selected = identity_partition(n).centroids;
    const auto start = Clock::now();
    CoarsenedGraph& c = result.coarse;
    c.partition = identity_partition(n);
    c.centroids = c.partition.centroids;
    c.coarse_of = c.partition.assignment;
    c.graph = g;
    if (node_values) {
      if (node_values->size() != n) throw std::invalid_argument("node value size mismatch");
      c.node_values = *node_values;
    }
    if (aggregation.keep_internal_weight) c.internal_weight = std::vector<double>(n, 0.0);
    result.times.reduce_s = seconds_since(start);
    return result;
  }

  auto start = Clock::now();
  const NodeWeights ones = x ? NodeWeights{} : NodeWeights::ones(n);
  result.ranking = make_ranking(g, ranking, x ? *x : ones, k, par);
  result.times.ranking_s = seconds_since(start);

  start = Clock::now();
  result.mis = k_mis(g, k, result.ranking, par);
  result.times.kmis_s = seconds_since(start);

  start = Clock::now();
  const auto partition = cluster(g, k, result.ranking, result.mis, par);
  result.coarse = reduce(g, partition, aggregation, node_values);
  result.times.reduce_s = seconds_since(start);
  return result;
}

}  // namespace kcoarsen
