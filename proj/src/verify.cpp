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

#include "kcoarsen/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kcoarsen {

namespace {

constexpr std::pair<ViolationKind, std::string_view> kKindNames[] = {
    {ViolationKind::kEdgeTooShort, "edge_too_short"},
    {ViolationKind::kEdgeTooLong, "edge_too_long"},
    {ViolationKind::kDistanceShrunk, "distance_shrunk"},
    {ViolationKind::kDistanceStretched, "distance_stretched"},
    {ViolationKind::kComponentCount, "component_count"},
    {ViolationKind::kComponentMapping, "component_mapping"},
    {ViolationKind::kNotIndependent, "not_independent"},
    {ViolationKind::kNotMaximal, "not_maximal"},
    {ViolationKind::kCentroidNotFixed, "centroid_not_fixed"},
    {ViolationKind::kCentroidTooFar, "centroid_too_far"},
};

// Depth-limited BFS that only pays for the region it visits.
class LocalBfs {
 public:
  explicit LocalBfs(NodeId n) : dist_(n, kUnreachable) {}

  void run(const Graph& g, NodeId source, HopCount max_depth) {
    for (const NodeId v : visited_) dist_[v] = kUnreachable;
    visited_.assign({source});
    dist_[source] = 0;
    for (std::size_t head = 0; head < visited_.size(); ++head) {
      const NodeId u = visited_[head];
      if (dist_[u] == max_depth) continue;
      for (const NodeId v : g.neighbors(u)) {
        if (dist_[v] == kUnreachable) {
          dist_[v] = dist_[u] + 1;
          visited_.push_back(v);
        }
      }
    }
  }

  HopCount operator[](NodeId v) const { return dist_[v]; }
  const std::vector<NodeId>& visited() const { return visited_; }

 private:
  std::vector<HopCount> dist_;
  std::vector<NodeId> visited_;
};

template <typename T>
void append_all(std::vector<T>& into, std::vector<std::vector<T>>& parts, std::size_t used) {
  for (std::size_t c = 0; c < used; ++c) {
    into.insert(into.end(), std::make_move_iterator(parts[c].begin()),
                std::make_move_iterator(parts[c].end()));
  }
}

std::string format_hops(HopCount h) { return h == kUnreachable ? "inf" : std::to_string(h); }

HopCount parse_hops(std::string_view s) {
  if (s == "inf") return kUnreachable;
  HopCount h = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), h);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed hop count '" + std::string(s) + "'");
  }
  return h;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void check_pair(NodeId u, NodeId v, HopCount fine, HopCount coarse, unsigned k,
                DistortionReport& out, bool record) {
  if (fine == kUnreachable) {
    ++out.skipped_pairs;
    return;
  }
  if (record) out.pairs.push_back({u, v, fine, coarse});
  const std::vector<std::int64_t> witness{u, v, fine,
                                          coarse == kUnreachable ? -1 : std::int64_t{coarse}};
  if (coarse == kUnreachable || coarse > fine) {
    out.violations.push_back({ViolationKind::kDistanceShrunk, witness});
  } else if (static_cast<std::uint64_t>(fine) >
             (2ull * k + 1) * static_cast<std::uint64_t>(coarse) + 2ull * k) {
    out.violations.push_back({ViolationKind::kDistanceStretched, witness});
  }
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ViolationKind parse_violation_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown violation kind '" + std::string(name) + "'");
}

void DistortionReport::merge(DistortionReport other) {
  coarse_edges.insert(coarse_edges.end(), other.coarse_edges.begin(), other.coarse_edges.end());
  pairs.insert(pairs.end(), other.pairs.begin(), other.pairs.end());
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  skipped_pairs += other.skipped_pairs;
}

std::map<HopCount, std::size_t> DistortionReport::edge_distance_histogram() const {
  std::map<HopCount, std::size_t> hist;
  for (const auto& e : coarse_edges) ++hist[e.distance];
  return hist;
}

DistortionReport check_edge_bounds(const Graph& g, const CoarsenedGraph& h, unsigned k,
                                   const Parallelism& par) {
  const NodeId coarse_n = h.graph.num_nodes();
  const HopCount lower = k + 1;
  const HopCount upper = 2 * k + 1;
  const std::size_t slots = std::max(1u, par.workers);
  std::vector<std::vector<CoarseEdgeDistance>> edge_parts(slots);
  std::vector<std::vector<Violation>> violation_parts(slots);

  const auto used = parallel_for(coarse_n, par, [&](std::size_t begin, std::size_t end, std::size_t c) {
    LocalBfs bfs(g.num_nodes());
    for (std::size_t i = begin; i < end; ++i) {
      const auto ci = static_cast<NodeId>(i);
      bool ran = false;
      for (const NodeId j : h.graph.neighbors(ci)) {
        if (j < ci) continue;
        if (!ran) {
          bfs.run(g, h.centroids[ci], upper + 1);
          ran = true;
        }
        const NodeId a = h.centroids[ci];
        const NodeId b = h.centroids[j];
        const HopCount d = bfs[b];
        edge_parts[c].push_back({a, b, d});
        const std::vector<std::int64_t> witness{a, b, d == kUnreachable ? -1 : std::int64_t{d}};
        if (d < lower) violation_parts[c].push_back({ViolationKind::kEdgeTooShort, witness});
        if (d > upper) violation_parts[c].push_back({ViolationKind::kEdgeTooLong, witness});
      }
    }
  });
  DistortionReport report;
  append_all(report.coarse_edges, edge_parts, used);
  append_all(report.violations, violation_parts, used);
  return report;
}

DistortionReport check_distortion(const Graph& g, const CoarsenedGraph& h, unsigned k,
                                  const PairSampling& sampling, const Parallelism& par) {
  const NodeId n = g.num_nodes();
  DistortionReport report;
  if (n == 0) return report;

  // Each task: one source u and the targets to pair it with.
  struct Task {
    NodeId source;
    std::vector<NodeId> targets;
  };
  std::vector<Task> tasks;
  if (n <= sampling.exhaustive_limit) {
    for (NodeId u = 0; u < n; ++u) {
      Task t{u, {}};
      for (NodeId v = u; v < n; ++v) t.targets.push_back(v);
      tasks.push_back(std::move(t));
    }
  } else {
    const auto sources = static_cast<std::size_t>(
        std::ceil(std::sqrt(static_cast<double>(std::max<std::size_t>(1, sampling.samples)))));
    const std::size_t per_source = (sampling.samples + sources - 1) / sources;
    std::mt19937_64 rng(sampling.seed);
    std::uniform_int_distribution<NodeId> pick(0, n - 1);
    for (std::size_t s = 0; s < sources; ++s) {
      Task t{pick(rng), {}};
      for (std::size_t i = 0; i < per_source; ++i) t.targets.push_back(pick(rng));
      tasks.push_back(std::move(t));
    }
  }

  std::vector<DistortionReport> parts(tasks.size());
  parallel_for(tasks.size(), par, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) {
      const Task& t = tasks[i];
      const auto fine = bfs(g, t.source);
      const auto coarse = bfs(h.graph, h.coarse_of[t.source]);
      for (const NodeId v : t.targets) {
        check_pair(t.source, v, fine.dist[v], coarse.dist[h.coarse_of[v]], k, parts[i],
                   sampling.record_pairs);
      }
    }
  });
  for (auto& p : parts) report.merge(std::move(p));
  return report;
}

ComponentReport check_components(const Graph& g, const CoarsenedGraph& h) {
  ComponentReport report;
  const auto fine = connected_components(g);
  const auto coarse = connected_components(h.graph);
  report.fine_components = fine.count;
  report.coarse_components = coarse.count;
  if (fine.count != coarse.count) {
    report.violations.push_back(
        {ViolationKind::kComponentCount, {std::int64_t{fine.count}, std::int64_t{coarse.count}}});
  }
  // image[c] = coarse component of fine component c; representative[c] its first node.
  std::vector<NodeId> image(fine.count, kNoLabel);
  std::vector<NodeId> representative(fine.count, kNoLabel);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const NodeId c = fine.label[v];
    const NodeId target = coarse.label[h.coarse_of[v]];
    if (image[c] == kNoLabel) {
      image[c] = target;
      representative[c] = v;
    } else if (image[c] != target) {
      report.violations.push_back(
          {ViolationKind::kComponentMapping, {representative[c], v, image[c], target}});
    }
  }
  std::vector<NodeId> owner(coarse.count, kNoLabel);
  for (NodeId c = 0; c < fine.count; ++c) {
    const NodeId target = image[c];
    if (owner[target] == kNoLabel) {
      owner[target] = c;
    } else {
      report.violations.push_back({ViolationKind::kComponentMapping,
                                   {representative[owner[target]], representative[c], target}});
    }
  }
  return report;
}

ValidityReport check_kmis_validity(const Graph& g, unsigned k, const std::vector<NodeId>& selected,
                                   const Parallelism& par) {
  const NodeId n = g.num_nodes();
  std::vector<std::uint8_t> in_set(n, 0);
  for (const NodeId s : selected) {
    if (s >= n) throw std::invalid_argument("selected node " + std::to_string(s) + " out of range");
    in_set[s] = 1;
  }
  const std::size_t slots = std::max(1u, par.workers);
  std::vector<std::vector<Violation>> parts(slots);
  const auto used = parallel_for(selected.size(), par, [&](std::size_t begin, std::size_t end, std::size_t c) {
    LocalBfs bfs(n);
    for (std::size_t i = begin; i < end; ++i) {
      const NodeId s = selected[i];
      bfs.run(g, s, k);
      for (const NodeId v : bfs.visited()) {
        if (v > s && in_set[v]) {
          parts[c].push_back({ViolationKind::kNotIndependent, {s, v, std::int64_t{bfs[v]}}});
        }
      }
    }
  });
  ValidityReport report;
  append_all(report.violations, parts, used);

  // Multi-source BFS for the cover radius.
  std::vector<HopCount> dist(n, kUnreachable);
  std::vector<NodeId> frontier;
  for (const NodeId s : selected) {
    if (dist[s] != 0) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  std::vector<NodeId> next;
  for (HopCount depth = 1; depth <= k && !frontier.empty(); ++depth) {
    next.clear();
    for (const NodeId u : frontier) {
      for (const NodeId v : g.neighbors(u)) {
        if (dist[v] == kUnreachable) {
          dist[v] = depth;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
  for (NodeId v = 0; v < n; ++v) {
    if (dist[v] == kUnreachable) report.violations.push_back({ViolationKind::kNotMaximal, {v}});
  }
  return report;
}

ValidityReport check_partition(const Graph& g, unsigned k, const Partition& p,
                               const Parallelism& par) {
  const NodeId n = g.num_nodes();
  ValidityReport report;
  if (p.assignment.size() != n) throw std::invalid_argument("partition size does not match graph");
  std::vector<std::vector<NodeId>> members(n);
  for (NodeId v = 0; v < n; ++v) {
    const NodeId c = p.assignment[v];
    if (c >= n) throw std::invalid_argument("node " + std::to_string(v) + " maps out of range");
    members[c].push_back(v);
  }
  for (const NodeId c : p.centroids) {
    if (p.assignment[c] != c) {
      report.violations.push_back(
          {ViolationKind::kCentroidNotFixed, {c, std::int64_t{p.assignment[c]}}});
    }
  }
  std::vector<NodeId> heads;
  for (NodeId c = 0; c < n; ++c) {
    if (!members[c].empty()) heads.push_back(c);
  }
  const std::size_t slots = std::max(1u, par.workers);
  std::vector<std::vector<Violation>> parts(slots);
  const auto used = parallel_for(heads.size(), par, [&](std::size_t begin, std::size_t end, std::size_t c) {
    LocalBfs bfs(n);
    for (std::size_t i = begin; i < end; ++i) {
      const NodeId centroid = heads[i];
      bfs.run(g, centroid, k);
      for (const NodeId v : members[centroid]) {
        if (bfs[v] == kUnreachable) {
          parts[c].push_back({ViolationKind::kCentroidTooFar, {v, centroid}});
        }
      }
    }
  });
  append_all(report.violations, parts, used);
  return report;
}

void write_violations(std::ostream& out, const std::vector<Violation>& violations) {
  for (const auto& v : violations) {
    out << "violation," << to_string(v.kind);
    for (const auto w : v.witness) out << ',' << w;
    out << '\n';
  }
}

void write_distortion_report(std::ostream& out, const DistortionReport& report) {
  out << "# section,coarse_edges\na,b,distance\n";
  for (const auto& e : report.coarse_edges) {
    out << e.a << ',' << e.b << ',' << format_hops(e.distance) << '\n';
  }
  out << "# section,pairs\nu,v,fine,coarse\n";
  for (const auto& p : report.pairs) {
    out << p.u << ',' << p.v << ',' << format_hops(p.fine) << ',' << format_hops(p.coarse) << '\n';
  }
  out << "# section,violations\nkind,witness\n";
  for (const auto& v : report.violations) {
    out << to_string(v.kind) << ',';
    for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? " " : "") << v.witness[i];
    out << '\n';
  }
  out << "# section,summary\nskipped_pairs," << report.skipped_pairs << '\n';
}

DistortionReport parse_distortion_report(std::istream& in) {
  DistortionReport report;
  std::string section;
  std::string line;
  bool expect_header = false;
  const auto to_node = [](std::string_view s) {
    NodeId v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("malformed node id '" + std::string(s) + "'");
    }
    return v;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.starts_with("# section,")) {
      section = line.substr(10);
      expect_header = section != "summary";
      continue;
    }
    if (expect_header) {
      expect_header = false;
      continue;
    }
    const auto f = split(line, ',');
    if (section == "coarse_edges" && f.size() == 3) {
      report.coarse_edges.push_back({to_node(f[0]), to_node(f[1]), parse_hops(f[2])});
    } else if (section == "pairs" && f.size() == 4) {
      report.pairs.push_back({to_node(f[0]), to_node(f[1]), parse_hops(f[2]), parse_hops(f[3])});
    } else if (section == "violations" && f.size() == 2) {
      Violation v{parse_violation_kind(f[0]), {}};
      std::istringstream ws{std::string(f[1])};
      std::int64_t w = 0;
      while (ws >> w) v.witness.push_back(w);
      report.violations.push_back(std::move(v));
    } else if (section == "summary" && f.size() == 2 && f[0] == "skipped_pairs") {
      report.skipped_pairs = std::stoull(std::string(f[1]));
    } else {
      throw std::invalid_argument("unexpected report line '" + line + "'");
    }
  }
  return report;
}

}  // namespace kcoarsen
