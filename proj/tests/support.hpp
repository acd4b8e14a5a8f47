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

// Graph generators and brute-force oracles for the tests. The oracles work
// on dense matrices and never call into the library's algorithms, so they
// stay independent of the code under test.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "kcoarsen/graph.hpp"
#include "kcoarsen/ranking.hpp"

namespace kcoarsen::testing {

inline Graph make_graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
  std::vector<EdgeInput> edges;
  for (const auto& [u, v] : pairs) edges.push_back({u, v, std::nullopt});
  return Graph::build(n, edges);
}

inline Graph path_graph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make_graph(n, e);
}

inline Graph cycle_graph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return make_graph(n, e);
}

/// Node 0 is the center.
inline Graph star_graph(NodeId leaves) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return make_graph(leaves + 1, e);
}

inline Graph complete_graph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return make_graph(n, e);
}

/// rows x cols grid, node r * cols + c; 4- or 8-connected.
inline Graph grid_graph(NodeId rows, NodeId cols, bool diagonals = false) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId r = 0; r < rows; ++r) {
    for (NodeId c = 0; c < cols; ++c) {
      const NodeId v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
      if (diagonals && r + 1 < rows && c + 1 < cols) e.emplace_back(v, v + cols + 1);
      if (diagonals && r + 1 < rows && c > 0) e.emplace_back(v, v + cols - 1);
    }
  }
  return make_graph(rows * cols, e);
}

inline Graph random_graph(NodeId n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return make_graph(n, e);
}

/// Disjoint union of `parts` random graphs, with node ids shuffled so the
/// components interleave.
inline Graph random_disconnected_graph(NodeId parts, NodeId part_size, double p,
                                       std::mt19937_64& rng) {
  const NodeId n = parts * part_size;
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId c = 0; c < parts; ++c) {
    // A spanning path keeps each part connected.
    for (NodeId i = 0; i < part_size; ++i) {
      for (NodeId j = i + 1; j < part_size; ++j) {
        if (j == i + 1 || coin(rng)) e.emplace_back(perm[c * part_size + i], perm[c * part_size + j]);
      }
    }
  }
  return make_graph(n, e);
}

/// Ring lattice with `half` neighbors per side, each edge rewired with
/// probability beta.
inline Graph watts_strogatz(NodeId n, NodeId half, double beta, std::mt19937_64& rng) {
  std::bernoulli_distribution rewire(beta);
  std::uniform_int_distribution<NodeId> pick(0, n - 1);
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId j = 1; j <= half; ++j) {
      NodeId v = (u + j) % n;
      if (rewire(rng)) v = pick(rng);
      e.emplace_back(u, v);
    }
  }
  return make_graph(n, e);
}

inline std::vector<double> random_weights(NodeId n, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

inline std::vector<NodeId> random_permutation(NodeId n, std::mt19937_64& rng) {
  std::vector<NodeId> p(n);
  std::iota(p.begin(), p.end(), NodeId{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

using Matrix = std::vector<std::vector<std::uint32_t>>;

/// All-pairs hop distances by Floyd-Warshall on the adjacency matrix.
inline Matrix all_pairs_hops(const Graph& g) {
  const NodeId n = g.num_nodes();
  Matrix d(n, std::vector<std::uint32_t>(n, kInf));
  for (NodeId v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (NodeId m = 0; m < n; ++m) {
    for (NodeId i = 0; i < n; ++i) {
      if (d[i][m] == kInf) continue;
      for (NodeId j = 0; j < n; ++j) {
        if (d[m][j] != kInf) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
      }
    }
  }
  return d;
}

/// (A + I)^k x by dense matrix-vector products.
inline std::vector<double> dense_walk_counts(const Graph& g, std::vector<double> x, unsigned k) {
  const NodeId n = g.num_nodes();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (NodeId v = 0; v < n; ++v) a[v][v] = 1.0;
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1.0;
  for (unsigned step = 0; step < k; ++step) {
    std::vector<double> y(n, 0.0);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
    }
    x = std::move(y);
  }
  return x;
}

/// Lexicographically-first maximal k-independent set in rank order: scan
/// nodes by increasing key and keep one iff no kept node is within k hops.
inline std::vector<NodeId> sequential_k_mis(const Matrix& hops, unsigned k, const Ranking& pi) {
  std::vector<NodeId> kept;
  for (const NodeId v : pi.order()) {
    const bool free = std::none_of(kept.begin(), kept.end(),
                                   [&](NodeId s) { return hops[s][v] <= k; });
    if (free) kept.push_back(v);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

/// Each node goes to the best-ranked centroid within k hops.
inline std::vector<NodeId> nearest_ranked_centroid(const Matrix& hops, unsigned k, const Ranking& pi,
                                                   const std::vector<NodeId>& centroids) {
  const auto n = static_cast<NodeId>(hops.size());
  std::vector<NodeId> rho(n, std::numeric_limits<NodeId>::max());
  for (NodeId v = 0; v < n; ++v) {
    for (const NodeId s : centroids) {
      if (hops[s][v] > k) continue;
      if (rho[v] == std::numeric_limits<NodeId>::max() || pi.precedes(s, rho[v])) rho[v] = s;
    }
  }
  return rho;
}

/// Maximum-weight independent set by enumerating every subset (n <= 20).
inline double brute_force_mwis(const Graph& g, const std::vector<double>& x) {
  const NodeId n = g.num_nodes();
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool independent = true;
    for (const auto& e : g.edges()) {
      if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    double w = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (mask >> v & 1u) w += x[v];
    }
    best = std::max(best, w);
  }
  return best;
}

}  // namespace kcoarsen::testing
