// Copyright 2026 The Backbone Authors
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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "backbone/bench.h"
#include "backbone/discovery.h"
#include "backbone/graph.h"
#include "backbone/path_stats.h"
#include "backbone/report_io.h"

namespace backbone::cli {

namespace {

constexpr int kRuntimeFailure = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  bool largest_component = true;

  // stats
  std::size_t top = 10;
  bool counters = false;

  // discover
  std::string method = "mcg";
  long long k = -1;
  std::uint64_t seed = 0;
  int restarts = 5;
  std::string output;
  std::string dot;
  bool trace = false;

  // bench
  std::vector<std::size_t> sizes;
  std::size_t m = 4;
  std::vector<std::string> methods{"mcg", "iter"};
  std::string json_path;
  std::string csv_path;

  // export
  std::string report;
  std::string format = "dot";
};

Graph load(const Options& opt, std::ostream& err) {
  std::ifstream in(opt.input);
  if (!in) throw std::runtime_error("cannot open '" + opt.input + "'");
  EdgeListWarnings warnings;
  Graph g = parse_edge_list(in, &warnings);
  if (warnings.duplicate_edges > 0) {
    err << "warning: " << warnings.duplicate_edges
        << " duplicate edge(s) collapsed\n";
  }
  if (opt.largest_component) g = largest_component(g);
  return g;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Method method_or_usage(const std::string& name) {
  auto m = parse_method(name);
  if (!m) throw UsageError("unknown method '" + name + "' (vb, mcg, iter)");
  return *m;
}

int run_stats(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = load(opt, err);
  const PathStats stats = canonical_paths_stats(g);
  const auto score = vertex_betweenness(g);
  out << "vertices " << g.num_vertices() << '\n'
      << "edges " << g.num_edges() << '\n'
      << "components " << connected_components(g).size() << '\n'
      << "paths " << stats.total_paths << '\n'
      << "unreachable_pairs " << stats.unreachable_pairs << '\n';
  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return score[a] > score[b];
  });
  order.resize(std::min(order.size(), opt.top));
  out << "top_betweenness\n";
  for (VertexId v : order) {
    out << "  " << g.label(v) << ' ' << std::setprecision(12) << score[v]
        << '\n';
  }
  if (opt.counters) write_counters(out, g, stats);
  return 0;
}

int run_discover(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.k <= 0) throw UsageError("K must be positive");
  if (opt.restarts < 1) throw UsageError("restarts must be positive");
  DiscoveryConfig config;
  config.method = method_or_usage(opt.method);
  config.k = static_cast<std::size_t>(opt.k);
  config.seed = opt.seed;
  config.restarts = opt.restarts;

  const Graph g = load(opt, err);
  const DiscoveryResult result = discover(g, config);
  emit(opt.output, report_json(g, result, config, opt.trace), out);
  if (!opt.dot.empty()) emit(opt.dot, export_dot(g, result.backbone), out);
  return 0;
}

int run_bench_cmd(const Options& opt, std::ostream& out, std::ostream&) {
  if (opt.k <= 0) throw UsageError("K must be positive");
  std::vector<Method> methods;
  for (const auto& name : opt.methods) methods.push_back(method_or_usage(name));
  const auto results = run_bench(opt.sizes, opt.m,
                                 static_cast<std::size_t>(opt.k), methods,
                                 opt.seed, opt.restarts);
  if (!opt.csv_path.empty()) emit(opt.csv_path, bench_csv(results), out);
  if (!opt.json_path.empty() || opt.csv_path.empty()) {
    emit(opt.json_path, bench_json(results), out);
  }
  return 0;
}

int run_export(const Options& opt, std::ostream& out, std::ostream& err) {
  Options whole = opt;
  whole.largest_component = false;
  const Graph g = load(whole, err);
  Backbone b;
  if (!opt.report.empty()) b = backbone_from_report(g, slurp(opt.report));
  if (opt.format == "dot") {
    emit(opt.output, export_dot(g, b), out);
  } else {
    emit(opt.output, to_edge_list(g), out);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Backbone discovery over shortest-path traffic", "backbone"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Edge list, one 'u v' pair per line")
        ->required();
  };
  auto add_component_flag = [&](CLI::App* sub) {
    sub->add_flag("--largest-component,!--no-largest-component",
                  opt.largest_component,
                  "Restrict to the largest connected component (default on)");
  };

  CLI::App* stats = app.add_subcommand("stats", "Graph and betweenness summary");
  add_input(stats);
  add_component_flag(stats);
  stats->add_option("--top", opt.top, "Vertices listed by betweenness");
  stats->add_flag("--counters", opt.counters, "Dump every arc and segment counter");

  CLI::App* disc = app.add_subcommand("discover", "Find a backbone");
  add_input(disc);
  add_component_flag(disc);
  disc->add_option("--method", opt.method, "vb, mcg or iter")
      ->check(CLI::IsMember({"vb", "mcg", "iter"}));
  disc->add_option("--k", opt.k, "Backbone vertices")->required();
  disc->add_option("--seed", opt.seed, "Random seed (default 0)");
  disc->add_option("--restarts", opt.restarts, "Random restarts (default 5)");
  disc->add_option("-o,--output", opt.output, "Report JSON path (default stdout)");
  disc->add_option("--dot", opt.dot, "Also write a DOT export here");
  disc->add_flag("--trace", opt.trace, "Include iteration traces in the report");

  CLI::App* bench = app.add_subcommand("bench", "Scalability runs on power-law graphs");
  bench->add_option("--sizes", opt.sizes, "Graph sizes")->delimiter(',')->required();
  bench->add_option("--m", opt.m, "Attachment edges per vertex (default 4)");
  bench->add_option("--k", opt.k, "Backbone vertices (default 100)");
  bench->add_option("--methods", opt.methods, "Methods (default mcg,iter)")
      ->delimiter(',')
      ->check(CLI::IsMember({"vb", "mcg", "iter"}));
  bench->add_option("--seed", opt.seed, "Random seed (default 0)");
  bench->add_option("--restarts", opt.restarts, "Random restarts (default 5)");
  bench->add_option("--json", opt.json_path, "JSON output path");
  bench->add_option("--csv", opt.csv_path, "CSV output path");

  CLI::App* exp = app.add_subcommand("export", "Write the graph with a backbone highlighted");
  add_input(exp);
  exp->add_option("--report", opt.report, "Report JSON from discover");
  exp->add_option("--format", opt.format, "dot or edges")
      ->check(CLI::IsMember({"dot", "edges"}));
  exp->add_option("-o,--output", opt.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (stats->parsed()) return run_stats(opt, out, err);
    if (disc->parsed()) return run_discover(opt, out, err);
    if (bench->parsed()) {
      if (opt.k < 0) opt.k = 100;
      return run_bench_cmd(opt, out, err);
    }
    return run_export(opt, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
}

}  // namespace backbone::cli
