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

#include "kcoarsen/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "support.hpp"

namespace kcoarsen {
namespace {

LoadedGraph parse_el(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

LoadedGraph parse_mm(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_market(in);
}

TEST(EdgeList, PathOfThree) {
  const auto loaded = parse_el("0 1\n1 2\n");
  EXPECT_EQ(loaded.graph, testing::path_graph(3));
  EXPECT_EQ(loaded.original_ids, (std::vector<std::int64_t>{0, 1, 2}));
}

TEST(EdgeList, CommentsAndIdRemap) {
  const auto loaded = parse_el("# comment\n5 7\n");
  EXPECT_EQ(loaded.graph.num_nodes(), 2u);
  EXPECT_EQ(loaded.graph.num_edges(), 1u);
  EXPECT_EQ(loaded.original_ids, (std::vector<std::int64_t>{5, 7}));
}

TEST(EdgeList, TabsCommasAndPercentComments) {
  const auto loaded = parse_el("% header\n10\t20\n20,30\n\n");
  EXPECT_EQ(loaded.graph, testing::path_graph(3));
}

TEST(EdgeList, SymmetricListingDoesNotDoubleWeights) {
  const auto loaded = parse_el("0 1 2.5\n1 0 2.5\n");
  EXPECT_EQ(loaded.graph.edge_weight(0, 1), 2.5);
}

TEST(EdgeList, RepeatedRecordsSum) {
  const auto loaded = parse_el("0 1 2\n0 1 3\n");
  EXPECT_EQ(loaded.graph.edge_weight(0, 1), 5.0);
}

TEST(EdgeList, ReportsLineOfMalformedRecord) {
  try {
    parse_el("0 1\n1 2 3 4\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_el("0 x\n"), ParseError);
  EXPECT_THROW(parse_el("0 1 -2\n"), ParseError);
}

TEST(MatrixMarket, SymmetricPatternMatchesEdgeList) {
  const auto mm = parse_mm(
      "%%MatrixMarket matrix coordinate pattern symmetric\n"
      "% a comment\n"
      "4 4 3\n"
      "2 1\n3 2\n4 3\n");
  EXPECT_EQ(mm.graph, parse_el("0 1\n1 2\n2 3\n").graph);
}

TEST(MatrixMarket, GeneralRealWithBothTriangles) {
  const auto mm = parse_mm(
      "%%MatrixMarket matrix coordinate real general\n"
      "3 3 4\n"
      "1 2 1.5\n2 1 1.5\n2 3 2\n3 2 2\n");
  EXPECT_EQ(mm.graph.edge_weight(0, 1), 1.5);
  EXPECT_EQ(mm.graph.edge_weight(1, 2), 2.0);
  EXPECT_EQ(mm.graph.num_edges(), 2u);
}

TEST(MatrixMarket, RejectsBadHeaders) {
  EXPECT_THROW(parse_mm("%%MatrixMarket matrix array real general\n2 2\n"), ParseError);
  EXPECT_THROW(parse_mm("%%MatrixMarket matrix coordinate pattern symmetric\n2 3 0\n"), ParseError);
  EXPECT_THROW(parse_mm("%%MatrixMarket matrix coordinate pattern symmetric\n2 2 2\n2 1\n"),
               ParseError);
}

TEST(MatrixMarket, CrossParsesRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = testing::random_graph(30, 0.15, rng);
    std::ostringstream mm;
    mm << "%%MatrixMarket matrix coordinate pattern symmetric\n"
       << g.num_nodes() << ' ' << g.num_nodes() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges()) mm << e.v + 1 << ' ' << e.u + 1 << '\n';
    EXPECT_EQ(parse_mm(mm.str()).graph, g);
  }
}

TEST(Store, WeightedRoundTripIsBitExact) {
  std::mt19937_64 rng(5);
  const auto base = testing::random_graph(40, 0.2, rng);
  std::uniform_real_distribution<double> w(0.001, 1000.0);
  std::vector<EdgeInput> edges;
  for (const auto& e : base.edges()) edges.push_back({e.u, e.v, w(rng)});
  const auto g = Graph::build(base.num_nodes(), edges);

  const auto path = std::filesystem::temp_directory_path() / "kcoarsen_io_roundtrip.edgelist";
  store_graph(path, g, {"seed=5"});
  const auto loaded = load_graph(path, GraphFormat::kEdgeList);
  std::filesystem::remove(path);
  // Isolated nodes vanish from an edge list; compare on the induced ids.
  const auto remapped = Graph::from_edges(g.num_nodes(), g.edges(), true);
  ASSERT_EQ(loaded.graph.num_edges(), g.num_edges());
  for (const auto& e : loaded.graph.edges()) {
    const auto u = static_cast<NodeId>(loaded.original_ids[e.u]);
    const auto v = static_cast<NodeId>(loaded.original_ids[e.v]);
    EXPECT_EQ(remapped.edge_weight(u, v), e.weight);
  }
}

TEST(Store, FormatDoubleRoundTrips) {
  for (const double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678901234567}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Load, MissingFileThrows) {
  EXPECT_THROW(load_graph("/nonexistent/graph.txt", GraphFormat::kEdgeList), GraphError);
  EXPECT_THROW(parse_graph_format("csv"), GraphError);
  EXPECT_EQ(parse_graph_format("mtx"), GraphFormat::kMatrixMarket);
}

}  // namespace
}  // namespace kcoarsen
