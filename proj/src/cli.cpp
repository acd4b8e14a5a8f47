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

#include "kcoarsen/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "kcoarsen/coarsen.hpp"
#include "kcoarsen/io.hpp"
#include "kcoarsen/oracle.hpp"
#include "kcoarsen/verify.hpp"

namespace kcoarsen::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string command;
  std::string input;
  std::string format = "edgelist";
  unsigned k = 1;
  std::string rank = "kweight";
  std::string edge_agg = "sum";
  std::string node_agg = "centroid";
  std::string node_weights;
  std::string output;
  std::uint64_t seed = 0;
  unsigned threads = Parallelism::hardware().workers;
  NodeId power_cap = kDefaultPowerNodeCap;
  // verify
  std::size_t pairs = 10'000;
  NodeId exhaustive_limit = 500;
  std::string rho;
  // bench
  std::vector<unsigned> k_list{1, 2, 4, 8};
  std::size_t trials = 3;
  bool compare_greedy = false;
  std::string weight_range = "1:100";
  std::string rule = "both";
};

std::vector<std::string> config_lines(const RunConfig& c) {
  std::vector<std::string> lines{
      "command=" + c.command,      "input=" + c.input,
      "output=" + c.output,
      "format=" + c.format,        "k=" + std::to_string(c.k),
      "rank=" + c.rank,            "edge_agg=" + c.edge_agg,
      "node_agg=" + c.node_agg,    "node_weights=" + c.node_weights,
      "seed=" + std::to_string(c.seed), "threads=" + std::to_string(c.threads),
      "power_cap=" + std::to_string(c.power_cap)};
  if (c.command == "verify") {
    lines.push_back("pairs=" + std::to_string(c.pairs));
    lines.push_back("exhaustive_limit=" + std::to_string(c.exhaustive_limit));
    lines.push_back("rho=" + c.rho);
  }
  if (c.command == "bench") {
    std::string ks;
    for (const auto k : c.k_list) ks += (ks.empty() ? "" : ",") + std::to_string(k);
    lines.push_back("k_list=" + ks);
    lines.push_back("trials=" + std::to_string(c.trials));
    lines.push_back("compare_greedy=" + std::string(c.compare_greedy ? "true" : "false"));
    lines.push_back("weight_range=" + c.weight_range);
    lines.push_back("rule=" + c.rule);
  }
  return lines;
}

void write_header(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << "# " << l << '\n';
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write '" + path.string() + "'");
  return out;
}

struct Prepared {
  LoadedGraph loaded;
  RankingSpec ranking;
  AggregationSpec aggregation;
  std::optional<NodeWeights> weights;
  std::optional<std::vector<double>> values;
  Parallelism par;
};

Prepared prepare(const RunConfig& c) {
  Prepared p;
  if (!fs::exists(c.input)) throw GraphError("input '" + c.input + "' does not exist");
  p.loaded = load_graph(c.input, parse_graph_format(c.format));
  std::string score_path;
  p.ranking = parse_ranking_spec(c.rank, &score_path);
  p.ranking.seed = c.seed;
  if (p.ranking.kind == RankingKind::kExternal) p.ranking.scores = read_values(score_path);
  p.aggregation.edges = parse_edge_aggregation(c.edge_agg);
  p.aggregation.nodes = parse_node_aggregation(c.node_agg);
  if (!c.node_weights.empty()) {
    auto values = read_values(c.node_weights);
    if (values.size() != p.loaded.graph.num_nodes()) {
      throw GraphError("node weight file has " + std::to_string(values.size()) +
                       " values for " + std::to_string(p.loaded.graph.num_nodes()) + " nodes");
    }
    p.weights = NodeWeights(values);
    p.values = std::move(values);
  }
  p.par.workers = std::max(1u, c.threads);
  return p;
}

PipelineResult run_pipeline(const Prepared& p, unsigned k) {
  return coarsen_pipeline(p.loaded.graph, k, p.ranking, p.aggregation,
                          p.weights ? &*p.weights : nullptr, p.values ? &*p.values : nullptr,
                          p.par);
}

int cmd_coarsen(const RunConfig& c, std::ostream& out) {
  const auto p = prepare(c);
  const auto result = run_pipeline(p, c.k);
  const auto header = config_lines(c);
  const fs::path dir(c.output);
  fs::create_directories(dir);

  const auto& ids = p.loaded.original_ids;
  store_graph(dir / "coarse.edgelist", result.coarse.graph, header);
  {
    auto f = open_output(dir / "rho.txt");
    write_header(f, header);
    f << "# original_id centroid_id\n";
    for (NodeId v = 0; v < p.loaded.graph.num_nodes(); ++v) {
      f << ids[v] << ' ' << ids[result.coarse.partition.assignment[v]] << '\n';
    }
  }
  {
    auto f = open_output(dir / "centroids.txt");
    write_header(f, header);
    f << "# coarse_index original_id\n";
    for (NodeId i = 0; i < result.coarse.centroids.size(); ++i) {
      f << i << ' ' << ids[result.coarse.centroids[i]] << '\n';
    }
  }
  if (result.coarse.node_values) {
    auto f = open_output(dir / "node_values.txt");
    write_header(f, header);
    for (const double v : *result.coarse.node_values) f << format_double(v) << '\n';
  }

  const auto& g = p.loaded.graph;
  const double ratio = g.num_nodes() == 0 ? 0.0
                                          : static_cast<double>(result.coarse.graph.num_nodes()) /
                                                static_cast<double>(g.num_nodes());
  std::ostringstream stats;
  stats << "n,m,centroids,coarse_edges,reduction_ratio,rounds,t_ranking,t_kmis,t_reduce\n"
        << g.num_nodes() << ',' << g.num_edges() << ',' << result.coarse.graph.num_nodes() << ','
        << result.coarse.graph.num_edges() << ',' << ratio << ',' << result.mis.rounds << ','
        << result.times.ranking_s << ',' << result.times.kmis_s << ',' << result.times.reduce_s
        << '\n';
  {
    auto f = open_output(dir / "stats.csv");
    write_header(f, header);
    f << stats.str();
  }
  out << stats.str();
  return kExitOk;
}

Partition partition_from_rho(const LoadedGraph& loaded, const fs::path& path) {
  std::unordered_map<std::int64_t, NodeId> dense;
  for (NodeId v = 0; v < loaded.original_ids.size(); ++v) dense[loaded.original_ids[v]] = v;
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path.string() + "'");
  const NodeId n = loaded.graph.num_nodes();
  Partition p;
  p.assignment.assign(n, kNoLabel);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::int64_t node = 0;
    std::int64_t centroid = 0;
    if (!(fields >> node >> centroid)) throw ParseError(line_no, "expected 'original_id centroid_id'");
    const auto a = dense.find(node);
    const auto b = dense.find(centroid);
    if (a == dense.end() || b == dense.end()) throw ParseError(line_no, "unknown node id");
    p.assignment[a->second] = b->second;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (p.assignment[v] == kNoLabel) {
      throw GraphError("rho map has no entry for node " + std::to_string(loaded.original_ids[v]));
    }
    p.centroids.push_back(p.assignment[v]);
  }
  std::sort(p.centroids.begin(), p.centroids.end());
  p.centroids.erase(std::unique(p.centroids.begin(), p.centroids.end()), p.centroids.end());
  return p;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto p = prepare(c);
  const Graph& g = p.loaded.graph;

  CoarsenedGraph coarse;
  std::vector<NodeId> centroids;
  if (c.rho.empty()) {
    auto result = run_pipeline(p, c.k);
    centroids = result.mis.selected;
    coarse = std::move(result.coarse);
  } else {
    const auto partition = partition_from_rho(p.loaded, c.rho);
    centroids = partition.centroids;
    coarse = reduce(g, partition, p.aggregation);
  }

  const auto validity = check_kmis_validity(g, c.k, centroids, p.par);
  const auto partition_check = check_partition(g, c.k, coarse.partition, p.par);
  auto distortion = check_edge_bounds(g, coarse, c.k, p.par);
  PairSampling sampling;
  sampling.samples = c.pairs;
  sampling.seed = c.seed;
  sampling.exhaustive_limit = c.exhaustive_limit;
  sampling.record_pairs = false;
  distortion.merge(check_distortion(g, coarse, c.k, sampling, p.par));
  const auto components = check_components(g, coarse);

  std::vector<Violation> all = validity.violations;
  all.insert(all.end(), partition_check.violations.begin(), partition_check.violations.end());
  all.insert(all.end(), distortion.violations.begin(), distortion.violations.end());
  all.insert(all.end(), components.violations.begin(), components.violations.end());

  std::ostringstream summary;
  summary << "check,passed,violations\n"
          << "kmis_validity," << validity.ok() << ',' << validity.violations.size() << '\n'
          << "partition," << partition_check.ok() << ',' << partition_check.violations.size() << '\n';
  std::size_t edge_violations = 0;
  for (const auto& v : distortion.violations) {
    edge_violations += v.kind == ViolationKind::kEdgeTooShort || v.kind == ViolationKind::kEdgeTooLong;
  }
  const std::size_t pair_violations = distortion.violations.size() - edge_violations;
  summary << "edge_bounds," << (edge_violations == 0) << ',' << edge_violations << '\n'
          << "distortion," << (pair_violations == 0) << ',' << pair_violations << '\n'
          << "components," << components.ok() << ',' << components.violations.size() << '\n'
          << "# fine_components=" << components.fine_components
          << " coarse_components=" << components.coarse_components
          << " skipped_pairs=" << distortion.skipped_pairs << '\n';
  summary << "# edge_distance_histogram";
  for (const auto& [d, count] : distortion.edge_distance_histogram()) {
    summary << ' ' << (d == kUnreachable ? std::string("inf") : std::to_string(d)) << ':' << count;
  }
  summary << '\n';
  // Witnesses, capped on stdout.
  const std::size_t shown = std::min<std::size_t>(all.size(), 20);
  write_violations(summary, {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(shown)});
  out << summary.str();

  if (!c.output.empty()) {
    fs::create_directories(c.output);
    auto f = open_output(fs::path(c.output) / "report.csv");
    write_header(f, config_lines(c));
    f << summary.str();
    write_distortion_report(f, distortion);
    auto w = open_output(fs::path(c.output) / "violations.csv");
    write_header(w, config_lines(c));
    write_violations(w, all);
  }
  return all.empty() ? kExitOk : kExitViolation;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("weight range must be LO:HI");
  const double lo = std::stod(text.substr(0, colon));
  const double hi = std::stod(text.substr(colon + 1));
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("weight range needs 0 < LO < HI");
  return {lo, hi};
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (const double x : v) s += x;
  return s / static_cast<double>(v.size());
}

int cmd_bench(const RunConfig& c, std::ostream& out) {
  const auto p = prepare(c);
  const Graph& g = p.loaded.graph;
  const auto header = config_lines(c);

  std::ostringstream csv;
  csv << "row,k,trial,n,m,centroids,reduction_ratio,rounds,t_ranking,t_kmis,t_reduce,t_total\n";
  for (const unsigned k : c.k_list) {
    std::vector<double> ratios;
    std::vector<double> totals;
    std::vector<double> t_rank;
    std::vector<double> t_kmis;
    std::vector<double> t_reduce;
    for (std::size_t t = 0; t < c.trials; ++t) {
      const auto r = run_pipeline(p, k);
      const double ratio = g.num_nodes() == 0 ? 0.0
                                              : static_cast<double>(r.coarse.graph.num_nodes()) /
                                                    static_cast<double>(g.num_nodes());
      const double total = r.times.ranking_s + r.times.kmis_s + r.times.reduce_s;
      ratios.push_back(ratio);
      totals.push_back(total);
      t_rank.push_back(r.times.ranking_s);
      t_kmis.push_back(r.times.kmis_s);
      t_reduce.push_back(r.times.reduce_s);
      csv << "trial," << k << ',' << t << ',' << g.num_nodes() << ',' << g.num_edges() << ','
          << r.coarse.graph.num_nodes() << ',' << ratio << ',' << r.mis.rounds << ','
          << r.times.ranking_s << ',' << r.times.kmis_s << ',' << r.times.reduce_s << ',' << total
          << '\n';
    }
    csv << "mean," << k << ",," << g.num_nodes() << ',' << g.num_edges() << ",," << mean(ratios)
        << ",," << mean(t_rank) << ',' << mean(t_kmis) << ',' << mean(t_reduce) << ','
        << mean(totals) << '\n';
    csv << "median," << k << ",," << g.num_nodes() << ',' << g.num_edges() << ",,"
        << median(ratios) << ",," << median(t_rank) << ',' << median(t_kmis) << ','
        << median(t_reduce) << ',' << median(totals) << '\n';
  }
  out << csv.str();

  std::ostringstream weights_csv;
  if (c.compare_greedy) {
    const auto [lo, hi] = parse_range(c.weight_range);
    std::vector<GreedyRule> rules;
    if (c.rule == "both" || c.rule == "kdeg") rules.push_back(GreedyRule::kDegree);
    if (c.rule == "both" || c.rule == "kweight") rules.push_back(GreedyRule::kWeight);
    if (rules.empty()) throw std::invalid_argument("--rule must be kdeg, kweight or both");
    std::vector<OracleReport> reports;
    for (const unsigned k : c.k_list) {
      if (k == 0) continue;
      for (const auto rule : rules) {
        CompareOptions options;
        options.trials = c.trials;
        options.weight_min = lo;
        options.weight_max = hi;
        options.seed = c.seed;
        options.power_node_cap = c.power_cap;
        options.par = p.par;
        reports.push_back(compare(g, k, rule, options, fs::path(c.input).stem().string()));
      }
    }
    write_oracle_csv(weights_csv, reports);
    out << "graph,k,rule,mean_greedy,mean_ours,bounds_ok,note\n";
    for (const auto& r : reports) {
      const auto greedy = r.mean_greedy();
      out << r.graph_name << ',' << r.k << ',' << to_string(r.rule) << ','
          << (greedy ? format_double(*greedy) : "") << ',' << format_double(r.mean_ours()) << ','
          << r.ok() << ',' << r.note << '\n';
    }
  }

  if (!c.output.empty()) {
    fs::create_directories(c.output);
    auto f = open_output(fs::path(c.output) / "bench.csv");
    write_header(f, header);
    f << csv.str();
    if (c.compare_greedy) {
      auto w = open_output(fs::path(c.output) / "weights.csv");
      write_header(w, header);
      w << weights_csv.str();
    }
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, RunConfig& c, bool output_required) {
  cmd->add_option("-i,--input", c.input, "Input graph file")->required();
  cmd->add_option("-f,--format", c.format, "edgelist | mm");
  cmd->add_option("-k", c.k, "Distance parameter k (>= 0)");
  cmd->add_option("--rank", c.rank, "kdeg | kweight | id | random | const | file:PATH");
  cmd->add_option("--edge-agg", c.edge_agg, "sum | max | min | mean");
  cmd->add_option("--node-agg", c.node_agg, "centroid | sum | mean");
  cmd->add_option("--node-weights", c.node_weights, "File with one positive weight per node");
  auto* o = cmd->add_option("-o,--output", c.output, "Output directory");
  if (output_required) o->required();
  cmd->add_option("--seed", c.seed, "Seed for random rankings, weights and pair sampling");
  cmd->add_option("--threads", c.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--power-cap", c.power_cap, "Largest graph for explicit graph powers");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-MIS graph coarsening toolkit", "kcoarsen"};
  app.require_subcommand(1);
  RunConfig c;

  auto* coarsen = app.add_subcommand("coarsen", "Coarsen a graph around a maximal k-independent set");
  add_common(coarsen, c, true);

  auto* verify = app.add_subcommand("verify", "Coarsen and check the structural guarantees");
  add_common(verify, c, false);
  verify->add_option("--pairs", c.pairs, "Sampled node pairs above the exhaustive limit");
  verify->add_option("--exhaustive-limit", c.exhaustive_limit,
                     "Check all pairs on graphs up to this many nodes");
  verify->add_option("--rho", c.rho, "Verify this 'original_id centroid_id' map instead");

  auto* bench = app.add_subcommand("bench", "Sweep k and report reduction ratios and timings");
  add_common(bench, c, false);
  bench->add_option("--k-list", c.k_list, "Values of k")->delimiter(',');
  bench->add_option("--trials", c.trials, "Repetitions per k");
  bench->add_flag("--compare-greedy", c.compare_greedy,
                  "Compare k-MIS weights with sequential greedy on the graph power");
  bench->add_option("--weight-range", c.weight_range, "Uniform node weight range LO:HI");
  bench->add_option("--rule", c.rule, "kdeg | kweight | both");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (coarsen->parsed()) {
      c.command = "coarsen";
      return cmd_coarsen(c, out);
    }
    if (verify->parsed()) {
      c.command = "verify";
      return cmd_verify(c, out);
    }
    c.command = "bench";
    return cmd_bench(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace kcoarsen::cli
