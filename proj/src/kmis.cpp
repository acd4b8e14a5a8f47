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

#include "kcoarsen/kmis.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kcoarsen {

namespace {

void check_ranking(const Graph& g, const Ranking& pi) {
  if (pi.size() != g.num_nodes()) {
    throw std::invalid_argument("ranking covers " + std::to_string(pi.size()) +
                                " nodes, graph has " + std::to_string(g.num_nodes()));
  }
}

// Collects the nodes satisfying `pred`, in ascending order, with chunk-local
// buffers concatenated in chunk order.
template <typename Pred>
std::vector<NodeId> collect_nodes(NodeId n, const Parallelism& par, Pred&& pred) {
  std::vector<std::vector<NodeId>> parts(std::max(1u, par.workers));
  const std::size_t used = parallel_for(n, par, [&](std::size_t begin, std::size_t end, std::size_t c) {
    for (std::size_t v = begin; v < end; ++v) {
      if (pred(static_cast<NodeId>(v))) parts[c].push_back(static_cast<NodeId>(v));
    }
  });
  std::vector<NodeId> out;
  for (std::size_t c = 0; c < used; ++c) out.insert(out.end(), parts[c].begin(), parts[c].end());
  return out;
}

}  // namespace

unsigned propagate_min_labels(const Graph& g, std::vector<NodeId>& labels,
                              std::vector<NodeId>& scratch, unsigned rounds,
                              const Parallelism& par) {
  const NodeId n = g.num_nodes();
  std::vector<std::uint8_t> changed(std::max(1u, par.workers));
  unsigned effective = 0;
  for (unsigned r = 0; r < rounds; ++r) {
    std::fill(changed.begin(), changed.end(), 0);
    parallel_for(n, par, [&](std::size_t begin, std::size_t end, std::size_t c) {
      bool any = false;
      for (std::size_t v = begin; v < end; ++v) {
        NodeId best = labels[v];
        for (const NodeId u : g.neighbors(static_cast<NodeId>(v))) best = std::min(best, labels[u]);
        scratch[v] = best;
        any = any || best != labels[v];
      }
      changed[c] = any;
    });
    labels.swap(scratch);
    if (std::none_of(changed.begin(), changed.end(), [](std::uint8_t f) { return f != 0; })) break;
    ++effective;
  }
  return effective;
}

KMisResult k_mis(const Graph& g, unsigned k, const Ranking& pi, const Parallelism& par) {
  if (k == 0) throw std::invalid_argument("k_mis requires k >= 1");
  check_ranking(g, pi);
  const NodeId n = g.num_nodes();
  const auto position = pi.positions();

  KMisResult result{{}, 0, k};
  std::vector<std::uint8_t> active(n, 1);
  std::size_t remaining = n;
  std::vector<NodeId> labels(n);
  std::vector<NodeId> scratch(n);
  std::vector<std::uint8_t> chosen(n, 0);

  while (remaining > 0) {
    ++result.rounds;

    // Rank labels of active nodes reach every node within k hops.
    parallel_for(n, par, [&](std::size_t begin, std::size_t end, std::size_t) {
      for (std::size_t v = begin; v < end; ++v) labels[v] = active[v] ? position[v] : kNoLabel;
    });
    propagate_min_labels(g, labels, scratch, k, par);
    const auto round_selected = collect_nodes(
        n, par, [&](NodeId v) { return active[v] && labels[v] == position[v]; });

    // Flag flood: label 0 marks nodes within k hops of this round's picks.
    std::fill(chosen.begin(), chosen.end(), 0);
    for (const NodeId s : round_selected) chosen[s] = 1;
    parallel_for(n, par, [&](std::size_t begin, std::size_t end, std::size_t) {
      for (std::size_t v = begin; v < end; ++v) labels[v] = chosen[v] ? 0 : kNoLabel;
    });
    propagate_min_labels(g, labels, scratch, k, par);
    const auto removed =
        collect_nodes(n, par, [&](NodeId v) { return active[v] && labels[v] == 0; });
    for (const NodeId v : removed) active[v] = 0;
    remaining -= removed.size();

    result.selected.insert(result.selected.end(), round_selected.begin(), round_selected.end());
  }
  std::sort(result.selected.begin(), result.selected.end());
  return result;
}

KMisResult greedy_mis(const Graph& g, const Ranking& pi) {
  check_ranking(g, pi);
  const NodeId n = g.num_nodes();
  KMisResult result{{}, 0, 1};
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<NodeId> candidates(n);
  for (NodeId v = 0; v < n; ++v) candidates[v] = v;

  while (!candidates.empty()) {
    ++result.rounds;
    std::vector<NodeId> picked;
    for (const NodeId v : candidates) {
      bool local_min = true;
      for (const NodeId u : g.neighbors(v)) {
        if (alive[u] && pi.precedes(u, v)) {
          local_min = false;
          break;
        }
      }
      if (local_min) picked.push_back(v);
    }
    for (const NodeId v : picked) {
      alive[v] = 0;
      for (const NodeId u : g.neighbors(v)) alive[u] = 0;
    }
    result.selected.insert(result.selected.end(), picked.begin(), picked.end());
    std::erase_if(candidates, [&](NodeId v) { return !alive[v]; });
  }
  std::sort(result.selected.begin(), result.selected.end());
  return result;
}

KMisResult k_mis_reference(const Graph& g, unsigned k, const Ranking& pi, NodeId node_cap) {
  if (k == 0) throw std::invalid_argument("k_mis_reference requires k >= 1");
  check_ranking(g, pi);
  auto result = greedy_mis(power(g, k, node_cap), pi);
  result.k = k;
  return result;
}

}  // namespace kcoarsen
