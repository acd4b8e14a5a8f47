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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kcoarsen/coarsen.hpp"
#include "kcoarsen/graph.hpp"
#include "kcoarsen/kmis.hpp"
#include "kcoarsen/parallel.hpp"

namespace kcoarsen {

enum class ViolationKind {
  kEdgeTooShort,       // coarse edge endpoints closer than k + 1 in g
  kEdgeTooLong,        // coarse edge endpoints farther than 2k + 1 in g
  kDistanceShrunk,     // l_H(rho u, rho v) > l_G(u, v)
  kDistanceStretched,  // l_G(u, v) > (2k + 1) l_H(rho u, rho v) + 2k
  kComponentCount,
  kComponentMapping,
  kNotIndependent,
  kNotMaximal,
  kCentroidNotFixed,   // rho(s) != s
  kCentroidTooFar,     // l_G(v, rho v) > k
};

std::string_view to_string(ViolationKind kind);
ViolationKind parse_violation_kind(std::string_view name);

/// A failed check with the node ids (and distances) that witness it.
struct Violation {
  ViolationKind kind{};
  std::vector<std::int64_t> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CoarseEdgeDistance {
  NodeId a = 0;  // centroid ids in g
  NodeId b = 0;
  HopCount distance = 0;

  friend bool operator==(const CoarseEdgeDistance&, const CoarseEdgeDistance&) = default;
};

struct PairDistance {
  NodeId u = 0;
  NodeId v = 0;
  HopCount fine = 0;    // l_G(u, v)
  HopCount coarse = 0;  // l_H(rho u, rho v)

  friend bool operator==(const PairDistance&, const PairDistance&) = default;
};

/// Output of the distance and connectivity checks. Checks never throw on a
/// failed property; they record a violation and keep going.
struct DistortionReport {
  std::vector<CoarseEdgeDistance> coarse_edges;
  std::vector<PairDistance> pairs;
  std::vector<Violation> violations;
  std::size_t skipped_pairs = 0;  // pairs in different components of g

  bool ok() const { return violations.empty(); }
  void merge(DistortionReport other);
  /// Realized l_G per coarse edge, as distance -> count.
  std::map<HopCount, std::size_t> edge_distance_histogram() const;

  friend bool operator==(const DistortionReport&, const DistortionReport&) = default;
};

/// Checks k + 1 <= l_G(a, b) <= 2k + 1 for every coarse edge (a, b). BFS
/// from each centroid stops at depth 2k + 2.
DistortionReport check_edge_bounds(const Graph& g, const CoarsenedGraph& h, unsigned k,
                                   const Parallelism& par = {});

struct PairSampling {
  /// Graphs with at most this many nodes are checked on all pairs.
  NodeId exhaustive_limit = 500;
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
  /// Keep every checked pair in the report (off for large runs).
  bool record_pairs = true;
};

/// Checks l_H(rho u, rho v) <= l_G(u, v) <= (2k + 1) l_H(rho u, rho v) + 2k.
/// Above the exhaustive limit, pairs are drawn as ceil(sqrt(samples)) random
/// sources times as many random targets per source.
DistortionReport check_distortion(const Graph& g, const CoarsenedGraph& h, unsigned k,
                                  const PairSampling& sampling = {},
                                  const Parallelism& par = {});

struct ComponentReport {
  NodeId fine_components = 0;
  NodeId coarse_components = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Equal component counts and rho maps each component of g onto exactly
/// one component of h, injectively.
ComponentReport check_components(const Graph& g, const CoarsenedGraph& h);

struct ValidityReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Pairwise distance > k among `selected` and cover radius <= k.
ValidityReport check_kmis_validity(const Graph& g, unsigned k, const std::vector<NodeId>& selected,
                                   const Parallelism& par = {});

/// rho(s) = s for centroids and l_G(v, rho v) <= k for every node.
ValidityReport check_partition(const Graph& g, unsigned k, const Partition& p,
                               const Parallelism& par = {});

/// CSV sections ("# section,<name>") for coarse edges, pairs, violations
/// and the skipped-pair count. parse_distortion_report reads it back.
void write_distortion_report(std::ostream& out, const DistortionReport& report);
DistortionReport parse_distortion_report(std::istream& in);

/// Writes one "violation,<kind>,<witness...>" line per entry.
void write_violations(std::ostream& out, const std::vector<Violation>& violations);

}  // namespace kcoarsen
