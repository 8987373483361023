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

#include "backbone/report_io.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace backbone {

namespace {

using nlohmann::json;

json report_fields(const ModelReport& r) {
  return {
      {"k", r.k},
      {"loglik_independent", r.loglik_independent},
      {"loglik_markovian", r.loglik_markovian},
      {"loglik_bimodal", r.loglik_bimodal},
      {"param_em", r.param_em},
      {"param_bm", r.param_bm},
      {"reduction_ratio", r.reduction_ratio},
      {"accuracy_ratio", r.accuracy_ratio},
      {"edge_density", r.edge_density},
  };
}

std::string dot_id(std::string_view label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

constexpr std::string_view kHighlight =
    " [class=\"backbone\", color=\"red\", penwidth=2.5]";

}  // namespace

std::string report_json(const Graph& g, const DiscoveryResult& result,
                        const DiscoveryConfig& config, bool with_trace) {
  json j = report_fields(result.report);
  j["method"] = method_name(config.method);
  j["seed"] = config.seed;
  j["restarts"] = config.restarts;
  j["vertices"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["w"] = result.w;

  json vertices = json::array();
  for (VertexId v : result.backbone.vertices) vertices.push_back(g.label(v));
  json edges = json::array();
  for (EdgeId e : result.backbone.edges) {
    auto [u, v] = g.edge(e);
    edges.push_back({g.label(u), g.label(v)});
  }
  j["backbone_vertices"] = vertices;
  j["backbone_edges"] = edges;
  j["timings"] = {{"preprocess_seconds", result.timings.preprocess_seconds},
                  {"discover_seconds", result.timings.discover_seconds}};
  if (with_trace) {
    json refine = json::array();
    for (const RefineStep& s : result.refine_trace) {
      refine.push_back(
          {{"w_high", s.w_high}, {"w_low", s.w_low}, {"w_best", s.w_best}});
    }
    j["trace"] = {{"objectives", result.objectives}, {"refine", refine}};
  }
  return j.dump(2) + "\n";
}

Backbone backbone_from_report(const Graph& g, std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  auto vertex = [&](const json& label) {
    if (!label.is_string()) {
      throw std::invalid_argument("report vertex labels must be strings");
    }
    auto v = g.find_vertex(label.get<std::string>());
    if (!v) {
      throw std::invalid_argument("report names unknown vertex '" +
                                  label.get<std::string>() + "'");
    }
    return *v;
  };
  if (!j.is_object() || !j.contains("backbone_vertices") ||
      !j["backbone_vertices"].is_array()) {
    throw std::invalid_argument("report has no backbone_vertices list");
  }
  Backbone b;
  for (const json& label : j["backbone_vertices"]) {
    b.vertices.push_back(vertex(label));
  }
  for (const json& pair : j.value("backbone_edges", json::array())) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("report edges must be label pairs");
    }
    auto e = g.find_edge(vertex(pair[0]), vertex(pair[1]));
    if (!e) throw std::invalid_argument("report names an edge not in the graph");
    b.edges.push_back(*e);
  }
  std::sort(b.vertices.begin(), b.vertices.end());
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

std::string bench_json(std::span<const BenchResult> results) {
  json rows = json::array();
  for (const BenchResult& r : results) {
    json row = {{"n", r.n},
                {"m", r.m},
                {"k", r.k},
                {"seed", r.seed},
                {"method", method_name(r.method)},
                {"preprocess_seconds", r.preprocess_seconds},
                {"discover_seconds", r.discover_seconds}};
    row["report"] = report_fields(r.report);
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

std::string bench_csv(std::span<const BenchResult> results) {
  std::ostringstream out;
  out.precision(17);
  out << "n,m,k,seed,method,preprocess_seconds,discover_seconds,"
         "loglik_markovian,loglik_bimodal,reduction_ratio,accuracy_ratio,"
         "edge_density\n";
  for (const BenchResult& r : results) {
    out << r.n << ',' << r.m << ',' << r.k << ',' << r.seed << ','
        << method_name(r.method) << ',' << r.preprocess_seconds << ','
        << r.discover_seconds << ',' << r.report.loglik_markovian << ','
        << r.report.loglik_bimodal << ',' << r.report.reduction_ratio << ','
        << r.report.accuracy_ratio << ',' << r.report.edge_density << '\n';
  }
  return out.str();
}

std::string export_dot(const Graph& g, const Backbone& b) {
  std::vector<char> on_vertex(g.num_vertices(), 0);
  std::vector<char> on_edge(g.num_edges(), 0);
  for (VertexId v : b.vertices) on_vertex[v] = 1;
  for (EdgeId e : b.edges) on_edge[e] = 1;

  std::string out = "graph backbone {\n";
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    out += "  " + dot_id(g.label(v));
    if (on_vertex[v]) out += kHighlight;
    out += ";\n";
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
    auto [u, v] = g.edge(e);
    out += "  " + dot_id(g.label(u)) + " -- " + dot_id(g.label(v));
    if (on_edge[e]) out += kHighlight;
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace backbone
