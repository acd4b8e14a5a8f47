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
#include <span>
#include <vector>

#include "kcoarsen/graph.hpp"
#include "kcoarsen/parallel.hpp"
#include "kcoarsen/ranking.hpp"

namespace kcoarsen {

/// A maximal k-independent set: centroids pairwise more than k hops apart,
/// every node within k hops of some centroid.
struct KMisResult {
  std::vector<NodeId> selected;  // ascending node ids
  std::size_t rounds = 0;        // outer selection rounds executed
  unsigned k = 0;
};

/// Label value of nodes that carry no label (inactive or not yet reached).
inline constexpr NodeId kNoLabel = static_cast<NodeId>(-1);

/// Runs up to `rounds` synchronous steps of inclusive-neighborhood minimum
/// propagation: label'[v] = min over u in N[v] of label[u]. Stops early once
/// a step changes nothing. `scratch` must have the same size as `labels`.
/// Returns the number of steps that changed at least one label.
unsigned propagate_min_labels(const Graph& g, std::vector<NodeId>& labels,
                              std::vector<NodeId>& scratch, unsigned rounds,
                              const Parallelism& par = {});

/// Deterministic parallel greedy maximal k-independent set.
///
/// Each outer round gives every still-active node its rank position as a
/// label (other nodes get kNoLabel), propagates minima for k steps over the
/// whole graph, and selects the active nodes that kept their own label. The
/// selected nodes then flood a flag k steps out; flagged nodes leave the
/// active set. Repeats until no node is active. The result depends only on
/// (g, k, pi), never on the worker count.
///
/// Throws std::invalid_argument for k == 0 or a ranking of the wrong size.
KMisResult k_mis(const Graph& g, unsigned k, const Ranking& pi, const Parallelism& par = {});

/// Classic parallel greedy MIS on g (select strict local rank minima, drop
/// their closed neighborhoods, repeat).
KMisResult greedy_mis(const Graph& g, const Ranking& pi);

/// Test oracle: greedy_mis on the explicitly materialized k-th power of g.
/// Throws GraphError when g exceeds `node_cap`.
KMisResult k_mis_reference(const Graph& g, unsigned k, const Ranking& pi,
                           NodeId node_cap = kDefaultPowerNodeCap);

}  // namespace kcoarsen
