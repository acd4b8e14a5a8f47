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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kcoarsen/graph.hpp"

namespace kcoarsen {

enum class GraphFormat { kEdgeList, kMatrixMarket };

GraphFormat parse_graph_format(std::string_view name);

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A graph read from disk together with the original id of every dense node.
struct LoadedGraph {
  Graph graph;
  std::vector<std::int64_t> original_ids;
};

/// Edge list: "u v [w]" records, '#' or '%' comment lines. Ids are remapped
/// to [0, n) in ascending order of their original value. An edge written in
/// both directions is one undirected edge; repeated records in the same
/// direction are coalesced by summing.
LoadedGraph parse_edge_list(std::istream& in);

/// Matrix Market coordinate format ("pattern", "real" or "integer";
/// "symmetric" or "general"). Node i of the file becomes dense id i - 1.
LoadedGraph parse_matrix_market(std::istream& in);

LoadedGraph load_graph(const std::filesystem::path& path, GraphFormat format);

/// Writes the edge list of g with dense ids, one "u v" or "u v w" per line.
/// Weights are printed in shortest round-trip form. `header` lines are
/// emitted as '#' comments first.
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& header = {});
void store_graph(const std::filesystem::path& path, const Graph& g,
                 const std::vector<std::string>& header = {});

/// One real per line; blank and comment lines are skipped.
std::vector<double> read_values(const std::filesystem::path& path);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace kcoarsen
