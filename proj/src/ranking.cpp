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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace kcoarsen {

Ranking::Ranking(std::vector<RankKey> keys) : keys_(std::move(keys)) {
  const NodeId n = size();
  for (NodeId v = 0; v < n; ++v) {
    if (std::isnan(keys_[v].score)) {
      throw std::invalid_argument("ranking key of node " + std::to_string(v) + " is NaN");
    }
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), NodeId{0});
  std::sort(order_.begin(), order_.end(),
            [this](NodeId a, NodeId b) { return keys_[a] < keys_[b]; });
  for (NodeId i = 1; i < n; ++i) {
    if (!(keys_[order_[i - 1]] < keys_[order_[i]])) {
      throw std::invalid_argument("ranking is not injective: nodes " +
                                  std::to_string(order_[i - 1]) + " and " +
                                  std::to_string(order_[i]) + " share a key");
    }
  }
  positions_.resize(n);
  for (NodeId i = 0; i < n; ++i) positions_[order_[i]] = i;
}

Ranking Ranking::relabel(std::span<const NodeId> perm) const {
  if (perm.size() != keys_.size()) throw std::invalid_argument("permutation length mismatch");
  std::vector<RankKey> moved(keys_.size());
  for (NodeId v = 0; v < size(); ++v) moved[perm[v]] = keys_[v];
  return Ranking(std::move(moved));
}

std::vector<double> walk_counts(const Graph& g, std::span<const double> x, unsigned k,
                                const Parallelism& par) {
  const NodeId n = g.num_nodes();
  if (x.size() != n) {
    throw std::invalid_argument("weight vector has " + std::to_string(x.size()) +
                                " entries for a graph of " + std::to_string(n) + " nodes");
  }
  std::vector<double> current(x.begin(), x.end());
  std::vector<double> next(n);
  for (unsigned round = 0; round < k; ++round) {
    parallel_for(n, par, [&](std::size_t begin, std::size_t end, std::size_t) {
      for (std::size_t v = begin; v < end; ++v) {
        double acc = current[v];
        for (const NodeId u : g.neighbors(static_cast<NodeId>(v))) acc += current[u];
        next[v] = acc;
      }
    });
    current.swap(next);
  }
  return current;
}

std::vector<double> degree_rule_scores(const Graph& g, const NodeWeights& x, unsigned k,
                                       const Parallelism& par) {
  if (x.size() != g.num_nodes()) throw std::invalid_argument("node weight length mismatch");
  const std::vector<double> ones(g.num_nodes(), 1.0);
  auto w = walk_counts(g, ones, k, par);
  for (NodeId v = 0; v < g.num_nodes(); ++v) w[v] = x[v] / w[v];
  return w;
}

std::vector<double> weight_rule_scores(const Graph& g, const NodeWeights& x, unsigned k,
                                       const Parallelism& par) {
  auto w = walk_counts(g, x.values(), k, par);
  for (NodeId v = 0; v < g.num_nodes(); ++v) w[v] = x[v] / w[v];
  return w;
}

Ranking rank_by_scores(std::span<const double> scores) {
  std::vector<RankKey> keys(scores.size());
  for (std::size_t v = 0; v < scores.size(); ++v) keys[v] = {-scores[v], v};
  return Ranking(std::move(keys));
}

Ranking rank_by_degree_rule(const Graph& g, const NodeWeights& x, unsigned k,
                            const Parallelism& par) {
  if (k == 0) throw std::invalid_argument("degree rule ranking requires k >= 1");
  return rank_by_scores(degree_rule_scores(g, x, k, par));
}

Ranking rank_by_weight_rule(const Graph& g, const NodeWeights& x, unsigned k,
                            const Parallelism& par) {
  if (k == 0) throw std::invalid_argument("weight rule ranking requires k >= 1");
  return rank_by_scores(weight_rule_scores(g, x, k, par));
}

Ranking rank_by_node_id(NodeId n) {
  std::vector<RankKey> keys(n);
  for (NodeId v = 0; v < n; ++v) keys[v] = {static_cast<double>(v), v};
  return Ranking(std::move(keys));
}

Ranking rank_constant(NodeId n) {
  std::vector<RankKey> keys(n);
  for (NodeId v = 0; v < n; ++v) keys[v] = {0.0, v};
  return Ranking(std::move(keys));
}

Ranking rank_random(NodeId n, std::uint64_t seed) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::mt19937_64 rng(seed);
  // std::shuffle's draw sequence is implementation-defined; this one is not.
  for (NodeId i = n; i > 1; --i) {
    const auto j = static_cast<NodeId>(rng() % i);
    std::swap(perm[i - 1], perm[j]);
  }
  std::vector<RankKey> keys(n);
  for (NodeId v = 0; v < n; ++v) keys[v] = {static_cast<double>(perm[v]), v};
  return Ranking(std::move(keys));
}

std::string_view to_string(RankingKind kind) {
  switch (kind) {
    case RankingKind::kDegreeRule: return "kdeg";
    case RankingKind::kWeightRule: return "kweight";
    case RankingKind::kNodeId: return "id";
    case RankingKind::kRandom: return "random";
    case RankingKind::kConstant: return "const";
    case RankingKind::kExternal: return "file";
  }
  return "unknown";
}

RankingSpec parse_ranking_spec(std::string_view text, std::string* external_path) {
  RankingSpec spec;
  if (text == "kdeg") {
    spec.kind = RankingKind::kDegreeRule;
  } else if (text == "kweight") {
    spec.kind = RankingKind::kWeightRule;
  } else if (text == "id") {
    spec.kind = RankingKind::kNodeId;
  } else if (text == "random") {
    spec.kind = RankingKind::kRandom;
  } else if (text == "const") {
    spec.kind = RankingKind::kConstant;
  } else if (text.starts_with("file:") && text.size() > 5) {
    spec.kind = RankingKind::kExternal;
    if (external_path) *external_path = std::string(text.substr(5));
  } else {
    throw std::invalid_argument("unknown ranking '" + std::string(text) + "'");
  }
  return spec;
}

Ranking make_ranking(const Graph& g, const RankingSpec& spec, const NodeWeights& x, unsigned k,
                     const Parallelism& par) {
  const NodeId n = g.num_nodes();
  switch (spec.kind) {
    case RankingKind::kDegreeRule: return rank_by_degree_rule(g, x, k, par);
    case RankingKind::kWeightRule: return rank_by_weight_rule(g, x, k, par);
    case RankingKind::kNodeId: return rank_by_node_id(n);
    case RankingKind::kRandom: return rank_random(n, spec.seed);
    case RankingKind::kConstant: return rank_constant(n);
    case RankingKind::kExternal:
      if (spec.scores.size() != n) {
        throw std::invalid_argument("external scores have " + std::to_string(spec.scores.size()) +
                                    " entries for " + std::to_string(n) + " nodes");
      }
      return rank_by_scores(spec.scores);
  }
  throw std::invalid_argument("unknown ranking kind");
}

}  // namespace kcoarsen
