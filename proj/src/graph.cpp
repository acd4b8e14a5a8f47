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

#include "kcoarsen/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kcoarsen {

Graph Graph::build(NodeId n, std::span<const EdgeInput> edges) {
  bool weighted = false;
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") references a node outside [0, " + std::to_string(n) + ")");
    }
    if (e.weight) {
      if (!(*e.weight > 0.0) || !std::isfinite(*e.weight)) {
        throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") has nonpositive weight");
      }
      weighted = true;
    }
    if (e.u == e.v) continue;
    normalized.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight.value_or(1.0)});
  }
  return from_edges(n, normalized, weighted);
}

Graph Graph::from_edges(NodeId n, std::span<const Edge> edges, bool weighted) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (auto& e : sorted) {
    if (e.u >= n || e.v >= n) throw GraphError("edge references a node outside the graph");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  std::vector<Edge> unique;
  unique.reserve(sorted.size());
  for (const auto& e : sorted) {
    if (e.u == e.v) continue;
    if (!unique.empty() && unique.back().u == e.u && unique.back().v == e.v) {
      unique.back().weight += e.weight;
    } else {
      unique.push_back(e);
    }
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : unique) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

  g.targets_.resize(unique.size() * 2);
  if (weighted) g.weights_.resize(unique.size() * 2);
  std::vector<EdgeIndex> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Lexicographic sweep: for each node, smaller neighbors arrive before
  // larger ones and both groups arrive in ascending order.
  for (const auto& e : unique) {
    const EdgeIndex a = cursor[e.u]++;
    const EdgeIndex b = cursor[e.v]++;
    g.targets_[a] = e.v;
    g.targets_[b] = e.u;
    if (weighted) {
      g.weights_[a] = e.weight;
      g.weights_[b] = e.weight;
    }
  }
  return g;
}

std::optional<double> Graph::edge_weight(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return std::nullopt;
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  if (!weighted()) return 1.0;
  return weights_[offsets_[u] + static_cast<EdgeIndex>(it - nbrs.begin())];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    const auto nbrs = neighbors(u);
    const auto ws = neighbor_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] > u) out.push_back({u, nbrs[i], ws.empty() ? 1.0 : ws[i]});
    }
  }
  return out;
}

Graph Graph::unweighted() const {
  Graph g = *this;
  g.weights_.clear();
  g.weights_.shrink_to_fit();
  return g;
}

NodeWeights::NodeWeights(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0) || !std::isfinite(values_[i])) {
      throw GraphError("node weight " + std::to_string(i) + " is not strictly positive");
    }
  }
}

Distances bfs(const Graph& g, NodeId source, HopCount max_depth) {
  if (source >= g.num_nodes()) {
    throw GraphError("bfs source " + std::to_string(source) + " out of range");
  }
  Distances d{source, std::vector<HopCount>(g.num_nodes(), kUnreachable)};
  std::vector<NodeId> frontier{source};
  std::vector<NodeId> next;
  d.dist[source] = 0;
  for (HopCount depth = 1; !frontier.empty() && depth <= max_depth; ++depth) {
    next.clear();
    for (const NodeId u : frontier) {
      for (const NodeId v : g.neighbors(u)) {
        if (d.dist[v] == kUnreachable) {
          d.dist[v] = depth;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
    if (depth == kUnreachable - 1) break;
  }
  return d;
}

Graph power(const Graph& g, unsigned k, NodeId node_cap) {
  if (k == 0) throw GraphError("graph power requires k >= 1");
  if (g.num_nodes() > node_cap) {
    throw GraphError("graph power refused: " + std::to_string(g.num_nodes()) +
                     " nodes exceed the cap of " + std::to_string(node_cap));
  }
  const NodeId n = g.num_nodes();
  std::vector<Edge> edges;
  std::vector<HopCount> seen(n, kUnreachable);
  std::vector<NodeId> touched;
  std::vector<NodeId> frontier;
  std::vector<NodeId> next;
  for (NodeId s = 0; s < n; ++s) {
    touched.assign({s});
    frontier.assign({s});
    seen[s] = 0;
    for (HopCount depth = 1; depth <= k && !frontier.empty(); ++depth) {
      next.clear();
      for (const NodeId u : frontier) {
        for (const NodeId v : g.neighbors(u)) {
          if (seen[v] == kUnreachable) {
            seen[v] = depth;
            next.push_back(v);
            touched.push_back(v);
          }
        }
      }
      frontier.swap(next);
    }
    for (const NodeId v : touched) {
      if (v > s) edges.push_back({s, v, 1.0});
      seen[v] = kUnreachable;
    }
  }
  return Graph::from_edges(n, edges, false);
}

Components connected_components(const Graph& g) {
  const NodeId n = g.num_nodes();
  Components c{0, std::vector<NodeId>(n, kUnreachable)};
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (c.label[s] != kUnreachable) continue;
    const NodeId id = c.count++;
    c.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (const NodeId v : g.neighbors(u)) {
        if (c.label[v] == kUnreachable) {
          c.label[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  return c;
}

Graph permute(const Graph& g, std::span<const NodeId> perm) {
  if (perm.size() != g.num_nodes()) throw GraphError("permutation length mismatch");
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  return Graph::from_edges(g.num_nodes(), edges, g.weighted());
}

}  // namespace kcoarsen
