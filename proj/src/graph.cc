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

#include "backbone/graph.h"

#include <algorithm>
#include <istream>
#include <queue>
#include <sstream>

namespace backbone {

Graph Graph::FromEdges(std::vector<std::string> labels,
                       std::span<const std::pair<VertexId, VertexId>> edges) {
  const auto n = static_cast<VertexId>(labels.size());
  Graph g;
  g.labels_ = std::move(labels);
  g.index_.reserve(g.labels_.size());
  for (VertexId v = 0; v < n; ++v) {
    if (!g.index_.emplace(g.labels_[v], v).second) {
      throw std::invalid_argument("duplicate vertex label '" + g.labels_[v] +
                                  "'");
    }
  }

  std::vector<std::pair<VertexId, VertexId>> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop on '" + g.labels_[u] + "'");
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  g.edge_ends_ = std::move(canon);

  // Arc (u->v) sorted by (u, v): count degrees, then place.
  std::vector<ArcId> degree(n + 1, 0);
  for (auto [u, v] : g.edge_ends_) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];

  const std::size_t num_arcs = 2 * g.edge_ends_.size();
  g.arc_tail_.resize(num_arcs);
  g.arc_head_.resize(num_arcs);
  g.arc_rev_.resize(num_arcs);
  g.arc_edge_.resize(num_arcs);
  g.edge_arc_.resize(g.edge_ends_.size());

  // Visiting edges in (u, v) order fills every row in ascending head order:
  // row w receives heads < w (as the larger endpoint) before heads > w.
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> rows(n);
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_ends_.size()); ++e) {
    auto [u, v] = g.edge_ends_[e];
    rows[u].emplace_back(v, e);
    rows[v].emplace_back(u, e);
  }
  for (VertexId u = 0; u < n; ++u) {
    std::sort(rows[u].begin(), rows[u].end());
    ArcId a = g.offsets_[u];
    for (auto [v, e] : rows[u]) {
      g.arc_tail_[a] = u;
      g.arc_head_[a] = v;
      g.arc_edge_[a] = e;
      if (u < v) g.edge_arc_[e] = a;
      ++a;
    }
  }
  for (ArcId a = 0; a < static_cast<ArcId>(num_arcs); ++a) {
    g.arc_rev_[a] = g.find_arc(g.arc_head_[a], g.arc_tail_[a]);
  }
  return g;
}

ArcId Graph::find_arc(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= static_cast<VertexId>(num_vertices()) ||
      v >= static_cast<VertexId>(num_vertices())) {
    return kNoArc;
  }
  auto row = neighbors(u);
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return kNoArc;
  return offsets_[u] + static_cast<ArcId>(it - row.begin());
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  ArcId a = find_arc(u, v);
  if (a == kNoArc) return std::nullopt;
  return arc_edge_[a];
}

std::optional<VertexId> Graph::find_vertex(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph parse_edge_list(std::istream& in, EdgeListWarnings* warnings) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] =
        index.emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a >> b) || (tokens >> extra)) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": expected exactly 2 tokens");
    }
    if (a == b) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": self-loop on '" + a + "'");
    }
    VertexId u = intern(a);
    VertexId v = intern(b);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }

  if (warnings != nullptr) {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    auto unique_end = std::unique(sorted.begin(), sorted.end());
    warnings->duplicate_edges =
        static_cast<std::size_t>(sorted.end() - unique_end);
  }
  return Graph::FromEdges(std::move(labels), edges);
}

Graph parse_edge_list(std::string_view text, EdgeListWarnings* warnings) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, warnings);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
    auto [u, v] = g.edge(e);
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> components;
  std::vector<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    queue.assign(1, root);
    seen[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    components.push_back(queue);
  }
  return components;
}

Graph largest_component(const Graph& g) {
  if (g.empty()) return Graph();
  auto components = connected_components(g);
  std::size_t best = 0;
  for (std::size_t i = 1; i < components.size(); ++i) {
    if (components[i].size() > components[best].size()) best = i;
  }
  if (components[best].size() == g.num_vertices()) return g;
  return induced_subgraph(g, components[best]);
}

namespace {

std::vector<char> membership(const Graph& g,
                             std::span<const VertexId> vertices) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : vertices) {
    if (v < 0 || v >= static_cast<VertexId>(g.num_vertices())) {
      throw std::domain_error("unknown vertex " + std::to_string(v));
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  auto in = membership(g, vertices);
  std::vector<VertexId> remap(g.num_vertices(), -1);
  std::vector<std::string> labels;
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    if (in[v]) {
      remap[v] = static_cast<VertexId>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
    auto [u, v] = g.edge(e);
    if (in[u] && in[v]) edges.emplace_back(remap[u], remap[v]);
  }
  return Graph::FromEdges(std::move(labels), edges);
}

bool is_connected(const Graph& g, std::span<const VertexId> vertices) {
  if (vertices.empty()) {
    throw std::domain_error("is_connected: empty vertex set");
  }
  auto in = membership(g, vertices);
  std::size_t target = 0;
  for (char c : in) target += c;

  VertexId root = *std::min_element(vertices.begin(), vertices.end());
  std::vector<VertexId> queue{root};
  in[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (VertexId w : g.neighbors(queue[head])) {
      if (in[w]) {
        in[w] = 0;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == target;
}

std::vector<EdgeId> induced_edges(const Graph& g,
                                  std::span<const VertexId> vertices) {
  auto in = membership(g, vertices);
  std::vector<EdgeId> out;
  std::vector<VertexId> unique(vertices.begin(), vertices.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  for (VertexId u : unique) {
    for (ArcId a = g.out_begin(u); a < g.out_end(u); ++a) {
      if (u < g.head(a) && in[g.head(a)]) out.push_back(g.edge_of(a));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace backbone
