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

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kcoarsen/graph.hpp"
#include "kcoarsen/parallel.hpp"

namespace kcoarsen {

/// Priority key of one node. Smaller keys are selected first; the tiebreak
/// (normally the node id) makes keys distinct without perturbing scores.
struct RankKey {
  double score = 0.0;
  std::uint64_t tiebreak = 0;

  friend auto operator<=>(const RankKey&, const RankKey&) = default;
};

/// Injective node priorities. Construction rejects duplicate or NaN keys.
class Ranking {
 public:
  Ranking() = default;
  explicit Ranking(std::vector<RankKey> keys);

  NodeId size() const { return static_cast<NodeId>(keys_.size()); }
  const RankKey& key(NodeId v) const { return keys_[v]; }
  std::span<const RankKey> keys() const { return keys_; }
  bool precedes(NodeId u, NodeId v) const { return keys_[u] < keys_[v]; }

  /// Nodes sorted by increasing key: order()[0] is selected first.
  std::span<const NodeId> order() const { return order_; }
  /// Inverse of order(): dense rank position of every node.
  std::span<const NodeId> positions() const { return positions_; }

  /// Ranking for the graph relabeled by `perm` (node v becomes perm[v]);
  /// keys travel with their nodes.
  Ranking relabel(std::span<const NodeId> perm) const;

 private:
  std::vector<RankKey> keys_;
  std::vector<NodeId> order_;
  std::vector<NodeId> positions_;
};

/// c_k = (A + I)^k x with binary adjacency, by k sparse products.
std::vector<double> walk_counts(const Graph& g, std::span<const double> x, unsigned k,
                                const Parallelism& par = {});

/// w(v) = x_v / [(A + I)^k 1]_v
std::vector<double> degree_rule_scores(const Graph& g, const NodeWeights& x, unsigned k,
                                       const Parallelism& par = {});
/// w(v) = x_v / [(A + I)^k x]_v
std::vector<double> weight_rule_scores(const Graph& g, const NodeWeights& x, unsigned k,
                                       const Parallelism& par = {});

/// Larger w first, ties by node id.
Ranking rank_by_degree_rule(const Graph& g, const NodeWeights& x, unsigned k,
                            const Parallelism& par = {});
Ranking rank_by_weight_rule(const Graph& g, const NodeWeights& x, unsigned k,
                            const Parallelism& par = {});

/// Higher score first, ties by node id.
Ranking rank_by_scores(std::span<const double> scores);
Ranking rank_by_node_id(NodeId n);
Ranking rank_constant(NodeId n);
/// Seeded uniform permutation; identical seeds give identical rankings.
Ranking rank_random(NodeId n, std::uint64_t seed);

enum class RankingKind { kDegreeRule, kWeightRule, kNodeId, kRandom, kConstant, kExternal };

struct RankingSpec {
  RankingKind kind = RankingKind::kDegreeRule;
  std::uint64_t seed = 0;
  std::vector<double> scores;  // kExternal only
};

/// Parses "kdeg", "kweight", "id", "random", "const" or "file:PATH". For
/// "file:" the path is returned in `external_path` and scores stay empty.
RankingSpec parse_ranking_spec(std::string_view text, std::string* external_path = nullptr);

std::string_view to_string(RankingKind kind);

/// Builds the ranking described by `spec`; the rule-based kinds use x and k.
Ranking make_ranking(const Graph& g, const RankingSpec& spec, const NodeWeights& x, unsigned k,
                     const Parallelism& par = {});

}  // namespace kcoarsen
