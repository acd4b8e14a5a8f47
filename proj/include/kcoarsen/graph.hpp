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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcoarsen {

using NodeId = std::uint32_t;
using EdgeIndex = std::uint64_t;
using HopCount = std::uint32_t;

/// Marks a node that is not reachable from the BFS source.
inline constexpr HopCount kUnreachable = std::numeric_limits<HopCount>::max();

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input record for Graph::build. Missing weights count as 1 when the graph
/// ends up weighted.
struct EdgeInput {
  NodeId u = 0;
  NodeId v = 0;
  std::optional<double> weight;
};

/// Normalized undirected edge with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending, symmetric, free of self-loops and
/// duplicates. Edge weights are optional; when present they are stored for
/// both directions of every edge and are strictly positive.
class Graph {
 public:
  Graph() = default;

  /// Normalizes `edges` over nodes [0, n): self-loops are dropped and
  /// parallel edges are coalesced by summing their weights.
  /// Throws GraphError on out-of-range ids or nonpositive weights.
  static Graph build(NodeId n, std::span<const EdgeInput> edges);

  /// Same as build(), from already-normalized edges.
  static Graph from_edges(NodeId n, std::span<const Edge> edges, bool weighted);

  NodeId num_nodes() const { return static_cast<NodeId>(offsets_.size() - 1); }
  EdgeIndex num_edges() const { return targets_.size() / 2; }
  bool weighted() const { return !weights_.empty(); }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  /// Weights aligned with neighbors(v); empty for unweighted graphs.
  std::span<const double> neighbor_weights(NodeId v) const {
    if (weights_.empty()) return {};
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }

  /// Weight of edge uv, 1 for unweighted graphs, nullopt if absent.
  std::optional<double> edge_weight(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return edge_weight(u, v).has_value(); }

  /// Every undirected edge once, as (u < v), sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Copy without edge weights (binary adjacency).
  Graph unweighted() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<EdgeIndex> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<double> weights_;
};

/// Strictly positive per-node weights (the MWIS objective).
class NodeWeights {
 public:
  NodeWeights() = default;
  explicit NodeWeights(std::vector<double> values);

  static NodeWeights ones(NodeId n) { return NodeWeights(std::vector<double>(n, 1.0)); }

  std::size_t size() const { return values_.size(); }
  double operator[](NodeId v) const { return values_[v]; }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// Hop distances from one source; unreachable nodes hold kUnreachable.
struct Distances {
  NodeId source = 0;
  std::vector<HopCount> dist;
};

/// Breadth-first hop distances. Nodes farther than `max_depth` are reported
/// as kUnreachable.
Distances bfs(const Graph& g, NodeId source, HopCount max_depth = kUnreachable);

inline constexpr NodeId kDefaultPowerNodeCap = 100'000;

/// k-th power of g: uv is an edge iff 1 <= hops(u, v) <= k. Unweighted.
/// Throws GraphError when g has more than `node_cap` nodes.
Graph power(const Graph& g, unsigned k, NodeId node_cap = kDefaultPowerNodeCap);

struct Components {
  NodeId count = 0;
  std::vector<NodeId> label;  // component id per node, numbered by smallest member
};

Components connected_components(const Graph& g);

/// Relabels node v as perm[v]. `perm` must be a permutation of [0, n).
Graph permute(const Graph& g, std::span<const NodeId> perm);

}  // namespace kcoarsen
