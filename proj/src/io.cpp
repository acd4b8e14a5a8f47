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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

namespace kcoarsen {

namespace {

struct Record {
  std::int64_t u;
  std::int64_t v;
  std::optional<double> weight;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

bool is_comment(std::string_view line) {
  return line.empty() || line.front() == '#' || line.front() == '%';
}

// Groups records by unordered pair. Records in the (min, max) orientation
// win; the reverse orientation is only used when no forward record exists,
// so a symmetric listing does not double edge weights.
std::vector<EdgeInput> fold_directions(const std::vector<Record>& records,
                                       const std::vector<NodeId>& dense_u,
                                       const std::vector<NodeId>& dense_v) {
  struct Slot {
    double forward = 0.0;
    double backward = 0.0;
    bool has_forward = false;
    bool has_backward = false;
    bool weighted = false;
  };
  std::map<std::pair<NodeId, NodeId>, Slot> slots;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const NodeId a = dense_u[i];
    const NodeId b = dense_v[i];
    if (a == b) continue;
    auto& slot = slots[{std::min(a, b), std::max(a, b)}];
    const double w = records[i].weight.value_or(1.0);
    slot.weighted = slot.weighted || records[i].weight.has_value();
    if (a < b) {
      slot.forward += w;
      slot.has_forward = true;
    } else {
      slot.backward += w;
      slot.has_backward = true;
    }
  }
  std::vector<EdgeInput> edges;
  edges.reserve(slots.size());
  for (const auto& [pair, slot] : slots) {
    EdgeInput e{pair.first, pair.second, std::nullopt};
    if (slot.weighted) e.weight = slot.has_forward ? slot.forward : slot.backward;
    edges.push_back(e);
  }
  return edges;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist" || name == "el" || name == "txt") return GraphFormat::kEdgeList;
  if (name == "mm" || name == "mtx" || name == "matrix_market") return GraphFormat::kMatrixMarket;
  throw GraphError("unknown graph format '" + std::string(name) + "'");
}

LoadedGraph parse_edge_list(std::istream& in) {
  std::vector<Record> records;
  std::vector<std::int64_t> ids;
  bool any_weight = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (is_comment(line)) continue;
    const auto fields = split_fields(line);
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(line_no, "expected 'u v' or 'u v w', got '" + std::string(line) + "'");
    }
    Record r{};
    if (!parse_number(fields[0], r.u) || !parse_number(fields[1], r.v) || r.u < 0 || r.v < 0) {
      throw ParseError(line_no, "node ids must be nonnegative integers");
    }
    if (fields.size() == 3) {
      double w = 0.0;
      if (!parse_number(fields[2], w)) throw ParseError(line_no, "malformed weight");
      if (!(w > 0.0)) throw ParseError(line_no, "edge weight must be positive");
      r.weight = w;
      any_weight = true;
    }
    records.push_back(r);
    ids.push_back(r.u);
    ids.push_back(r.v);
  }

  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto dense = [&ids](std::int64_t id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<NodeId> du(records.size());
  std::vector<NodeId> dv(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    du[i] = dense(records[i].u);
    dv[i] = dense(records[i].v);
    // Mixed files: unweighted records count as weight 1.
    if (any_weight && !records[i].weight) records[i].weight = 1.0;
  }
  const auto edges = fold_directions(records, du, dv);
  return {Graph::build(static_cast<NodeId>(ids.size()), edges), std::move(ids)};
}

LoadedGraph parse_matrix_market(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  if (!std::getline(in, raw)) return {};
  ++line_no;
  std::string lowered = raw;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto banner = split_fields(lowered);
  if (banner.size() < 5 || banner[0] != "%%matrixmarket" || banner[1] != "matrix" ||
      banner[2] != "coordinate") {
    throw ParseError(line_no, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'");
  }
  const auto field = banner[3];
  const auto symmetry = banner[4];
  if (field != "pattern" && field != "real" && field != "integer") {
    throw ParseError(line_no, "unsupported field '" + std::string(field) + "'");
  }
  if (symmetry != "symmetric" && symmetry != "general") {
    throw ParseError(line_no, "unsupported symmetry '" + std::string(symmetry) + "'");
  }
  const bool has_values = field != "pattern";

  std::int64_t rows = -1;
  std::int64_t cols = -1;
  std::int64_t entries = -1;
  std::vector<Record> records;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (is_comment(line)) continue;
    const auto fields = split_fields(line);
    if (rows < 0) {
      if (fields.size() != 3 || !parse_number(fields[0], rows) || !parse_number(fields[1], cols) ||
          !parse_number(fields[2], entries) || rows < 0 || cols < 0 || entries < 0) {
        throw ParseError(line_no, "malformed size line");
      }
      if (rows != cols) throw ParseError(line_no, "adjacency matrix must be square");
      records.reserve(static_cast<std::size_t>(entries));
      continue;
    }
    if (fields.size() != (has_values ? 3u : 2u)) throw ParseError(line_no, "malformed entry");
    Record r{};
    if (!parse_number(fields[0], r.u) || !parse_number(fields[1], r.v) || r.u < 1 || r.v < 1 ||
        r.u > rows || r.v > rows) {
      throw ParseError(line_no, "entry index out of range");
    }
    --r.u;
    --r.v;
    if (has_values) {
      double w = 0.0;
      if (!parse_number(fields[2], w)) throw ParseError(line_no, "malformed value");
      if (!(w > 0.0)) throw ParseError(line_no, "edge weight must be positive");
      r.weight = w;
    }
    records.push_back(r);
  }
  if (rows < 0) return {};
  if (static_cast<std::int64_t>(records.size()) != entries) {
    throw ParseError(line_no, "expected " + std::to_string(entries) + " entries, found " +
                                  std::to_string(records.size()));
  }
  std::vector<NodeId> du(records.size());
  std::vector<NodeId> dv(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    du[i] = static_cast<NodeId>(records[i].u);
    dv[i] = static_cast<NodeId>(records[i].v);
  }
  LoadedGraph out;
  out.graph = Graph::build(static_cast<NodeId>(rows), fold_directions(records, du, dv));
  out.original_ids.resize(static_cast<std::size_t>(rows));
  for (std::int64_t i = 0; i < rows; ++i) out.original_ids[static_cast<std::size_t>(i)] = i + 1;
  return out;
}

LoadedGraph load_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path.string() + "'");
  return format == GraphFormat::kEdgeList ? parse_edge_list(in) : parse_matrix_market(in);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& header) {
  for (const auto& line : header) out << "# " << line << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << format_double(e.weight);
    out << '\n';
  }
}

void store_graph(const std::filesystem::path& path, const Graph& g,
                 const std::vector<std::string>& header) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write '" + path.string() + "'");
  write_edge_list(out, g, header);
}

std::vector<double> read_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path.string() + "'");
  std::vector<double> values;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (is_comment(line)) continue;
    double v = 0.0;
    if (!parse_number(line, v)) throw ParseError(line_no, "expected one real value");
    values.push_back(v);
  }
  return values;
}

}  // namespace kcoarsen
