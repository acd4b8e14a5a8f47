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

#include "kcoarsen/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <queue>
#include <random>
#include <stdexcept>

#include "kcoarsen/io.hpp"
#include "kcoarsen/kmis.hpp"
#include "kcoarsen/ranking.hpp"

namespace kcoarsen {

namespace {

struct HeapEntry {
  double score;
  NodeId node;
  std::uint32_t version;
};

// Max-heap on score, smaller node id first on ties.
struct HeapOrder {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    return a.score != b.score ? a.score < b.score : a.node > b.node;
  }
};

void branch(const std::vector<std::uint32_t>& closed, const std::vector<double>& x,
            std::uint32_t candidates, std::uint32_t chosen, double weight, double& best,
            std::uint32_t& best_set) {
  if (candidates == 0) {
    if (weight > best) {
      best = weight;
      best_set = chosen;
    }
    return;
  }
  double bound = weight;
  for (std::uint32_t rest = candidates; rest != 0; rest &= rest - 1) {
    bound += x[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  if (bound <= best) return;
  const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
  const std::uint32_t bit = std::uint32_t{1} << v;
  branch(closed, x, candidates & ~closed[v], chosen | bit, weight + x[v], best, best_set);
  branch(closed, x, candidates & ~bit, chosen, weight, best, best_set);
}

}  // namespace

std::string_view to_string(GreedyRule rule) {
  return rule == GreedyRule::kDegree ? "degree" : "weight";
}

std::vector<NodeId> sequential_greedy_mwis(const Graph& g, const NodeWeights& x, GreedyRule rule) {
  const NodeId n = g.num_nodes();
  if (x.size() != n) throw std::invalid_argument("node weight size does not match graph");
  std::vector<std::size_t> degree(n);
  std::vector<long double> closed_sum(n);
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    long double s = x[v];
    for (const NodeId u : g.neighbors(v)) s += x[u];
    closed_sum[v] = s;
  }
  const auto score = [&](NodeId v) {
    return rule == GreedyRule::kDegree ? x[v] / static_cast<double>(degree[v] + 1)
                                       : x[v] / static_cast<double>(closed_sum[v]);
  };

  std::vector<std::uint8_t> alive(n, 1);
  std::vector<std::uint32_t> version(n, 0);
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapOrder> heap;
  for (NodeId v = 0; v < n; ++v) heap.push({score(v), v, 0});

  std::vector<NodeId> selected;
  std::vector<NodeId> removed;
  while (!heap.empty()) {
    const HeapEntry top = heap.top();
    heap.pop();
    if (!alive[top.node] || version[top.node] != top.version) continue;
    selected.push_back(top.node);
    removed.assign({top.node});
    alive[top.node] = 0;
    for (const NodeId u : g.neighbors(top.node)) {
      if (alive[u]) {
        alive[u] = 0;
        removed.push_back(u);
      }
    }
    for (const NodeId r : removed) {
      for (const NodeId y : g.neighbors(r)) {
        if (!alive[y]) continue;
        --degree[y];
        closed_sum[y] -= x[r];
        heap.push({score(y), y, ++version[y]});
      }
    }
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

ExactMwis exact_mwis(const Graph& g, const NodeWeights& x) {
  const NodeId n = g.num_nodes();
  if (n > kExactMwisNodeCap) {
    throw GraphError("exact_mwis supports at most " + std::to_string(kExactMwisNodeCap) +
                     " nodes, got " + std::to_string(n));
  }
  if (x.size() != n) throw std::invalid_argument("node weight size does not match graph");
  std::vector<std::uint32_t> closed(n);
  std::vector<double> weights(x.values().begin(), x.values().end());
  for (NodeId v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    for (const NodeId u : g.neighbors(v)) closed[v] |= std::uint32_t{1} << u;
  }
  double best = 0.0;
  std::uint32_t best_set = 0;
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  branch(closed, weights, all, 0, 0.0, best, best_set);

  ExactMwis out;
  for (NodeId v = 0; v < n; ++v) {
    if (best_set & (std::uint32_t{1} << v)) out.selected.push_back(v);
  }
  out.alpha = total_weight(x, out.selected);
  return out;
}

double total_weight(const NodeWeights& x, const std::vector<NodeId>& nodes) {
  double sum = 0.0;
  for (const NodeId v : nodes) sum += x[v];
  return sum;
}

double delta_k(const Graph& g, unsigned k) {
  const std::vector<double> ones(g.num_nodes(), 1.0);
  const auto c = walk_counts(g, ones, k);
  return c.empty() ? 0.0 : *std::max_element(c.begin(), c.end());
}

double greedy_bound_rhs(const Graph& g, const NodeWeights& x, unsigned k, GreedyRule rule) {
  double sum = 0.0;
  if (rule == GreedyRule::kDegree) {
    for (const double w : degree_rule_scores(g, x, k)) sum += w;
  } else {
    const auto w = weight_rule_scores(g, x, k);
    for (NodeId v = 0; v < g.num_nodes(); ++v) sum += w[v] * x[v];
  }
  return sum;
}

NodeWeights random_node_weights(NodeId n, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> values(n);
  for (auto& v : values) v = dist(rng);
  return NodeWeights(std::move(values));
}

double OracleReport::mean_ours() const {
  if (trials.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& t : trials) sum += t.ours_weight;
  return sum / static_cast<double>(trials.size());
}

std::optional<double> OracleReport::mean_greedy() const {
  if (trials.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& t : trials) {
    if (!t.greedy_weight) return std::nullopt;
    sum += *t.greedy_weight;
  }
  return sum / static_cast<double>(trials.size());
}

bool OracleReport::ok() const {
  return std::all_of(trials.begin(), trials.end(),
                     [](const OracleTrial& t) { return t.bound_ok && t.ratio_ok; });
}

OracleReport compare(const Graph& g, unsigned k, GreedyRule rule, const CompareOptions& options,
                     std::string graph_name) {
  if (k == 0) throw std::invalid_argument("compare requires k >= 1");
  const NodeId n = g.num_nodes();
  OracleReport report;
  report.graph_name = std::move(graph_name);
  report.k = k;
  report.rule = rule;
  report.delta_k = delta_k(g, k);

  std::optional<Graph> gk;
  if (options.run_greedy) {
    if (n <= options.power_node_cap) {
      gk = power(g, k, options.power_node_cap);
    } else {
      report.note = "greedy skipped: " + std::to_string(n) + " nodes exceed the power cap of " +
                    std::to_string(options.power_node_cap);
    }
  }

  report.trials.resize(options.trials);
  // Trials are independent; each one is single-threaded inside.
  parallel_for(options.trials, options.par, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t t = begin; t < end; ++t) {
      OracleTrial& row = report.trials[t];
      row.trial = t;
      row.seed = options.seed + t;
      const auto x = random_node_weights(n, options.weight_min, options.weight_max, row.seed);
      const Ranking pi = rule == GreedyRule::kDegree ? rank_by_degree_rule(g, x, k)
                                                     : rank_by_weight_rule(g, x, k);
      const auto mis = k_mis(g, k, pi);
      row.ours_weight = total_weight(x, mis.selected);
      row.bound_rhs = greedy_bound_rhs(g, x, k, rule);
      row.bound_ok = at_least(row.ours_weight, row.bound_rhs);
      if (gk) row.greedy_weight = total_weight(x, sequential_greedy_mwis(*gk, x, rule));
      if (n > 0 && n <= kExactMwisNodeCap) {
        row.exact_alpha = exact_mwis(g, x).alpha;
        row.ratio_rhs = *row.exact_alpha / report.delta_k;
        row.ratio_ok = at_least(row.ours_weight, *row.ratio_rhs);
      }
    }
  });
  return report;
}

void write_oracle_csv(std::ostream& out, const std::vector<OracleReport>& reports,
                      bool with_header) {
  if (with_header) {
    out << "graph,k,rule,trial,seed,greedy_weight,ours_weight,bound_rhs,ratio_rhs\n";
  }
  for (const auto& r : reports) {
    for (const auto& t : r.trials) {
      out << r.graph_name << ',' << r.k << ',' << to_string(r.rule) << ',' << t.trial << ','
          << t.seed << ',' << (t.greedy_weight ? format_double(*t.greedy_weight) : "") << ','
          << format_double(t.ours_weight) << ',' << format_double(t.bound_rhs) << ','
          << (t.ratio_rhs ? format_double(*t.ratio_rhs) : "") << '\n';
    }
  }
}

}  // namespace kcoarsen
