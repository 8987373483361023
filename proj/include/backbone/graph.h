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

#ifndef BACKBONE_GRAPH_H_
#define BACKBONE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace backbone {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using ArcId = std::int32_t;

inline constexpr ArcId kNoArc = -1;

// Raised by the edge-list reader. Carries the 1-based line number of the
// offending line (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised when a request cannot be met on the given graph, e.g. a backbone
// size larger than any connected component.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph stored in its bidirected form.
//
// Every undirected edge {u, v} (u < v) has a dense edge id, and is
// represented by two arcs u->v and v->u. Arcs are laid out CSR-style: the
// outgoing arcs of u occupy [out_begin(u), out_end(u)) and are ordered by
// head, so the i-th outgoing arc of u points to neighbors(u)[i]. The
// incoming arcs of u are the reverses of its outgoing arcs, and incoming
// arc i comes from neighbors(u)[i].
//
// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from labels and an undirected edge list over indices
  // [0, labels.size()). Duplicate and reversed-duplicate edges collapse.
  // Throws std::invalid_argument on self-loops, out-of-range endpoints or
  // repeated labels.
  static Graph FromEdges(std::vector<std::string> labels,
                         std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edge_ends_.size(); }
  std::size_t num_arcs() const { return arc_head_.size(); }
  bool empty() const { return labels_.empty(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {heads_begin() + offsets_[v], heads_begin() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }

  ArcId out_begin(VertexId v) const { return offsets_[v]; }
  ArcId out_end(VertexId v) const { return offsets_[v + 1]; }

  VertexId tail(ArcId a) const { return arc_tail_[a]; }
  VertexId head(ArcId a) const { return arc_head_[a]; }
  ArcId reverse(ArcId a) const { return arc_rev_[a]; }
  EdgeId edge_of(ArcId a) const { return arc_edge_[a]; }
  // Position of arc `a` among the outgoing arcs of its tail.
  std::size_t out_index(ArcId a) const {
    return static_cast<std::size_t>(a - offsets_[arc_tail_[a]]);
  }
  // The i-th incoming arc of v, i.e. neighbors(v)[i] -> v.
  ArcId in_arc(VertexId v, std::size_t i) const {
    return arc_rev_[offsets_[v] + static_cast<ArcId>(i)];
  }

  // Canonical endpoints (u, v) with u < v.
  std::pair<VertexId, VertexId> edge(EdgeId e) const { return edge_ends_[e]; }
  // Arc u->v of edge e where u is the smaller endpoint.
  ArcId edge_arc(EdgeId e) const { return edge_arc_[e]; }

  // kNoArc when u and v are not adjacent.
  ArcId find_arc(VertexId u, VertexId v) const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find_vertex(std::string_view label) const;

 private:
  const VertexId* heads_begin() const { return arc_head_.data(); }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<ArcId> offsets_{0};
  std::vector<VertexId> arc_tail_;
  std::vector<VertexId> arc_head_;
  std::vector<ArcId> arc_rev_;
  std::vector<EdgeId> arc_edge_;
  std::vector<std::pair<VertexId, VertexId>> edge_ends_;
  std::vector<ArcId> edge_arc_;
};

struct EdgeListWarnings {
  // Lines that repeated an edge already seen (in either orientation).
  std::size_t duplicate_edges = 0;
};

// Reads "u v" lines. Lines starting with '#' and blank lines are skipped.
// Vertices are numbered in order of first appearance.
Graph parse_edge_list(std::istream& in, EdgeListWarnings* warnings = nullptr);
Graph parse_edge_list(std::string_view text,
                      EdgeListWarnings* warnings = nullptr);

// One "u v" line per edge in edge-id order, using the original labels.
std::string to_edge_list(const Graph& g);

// Induced subgraph on the largest connected component. Ties go to the
// component holding the smallest vertex index.
Graph largest_component(const Graph& g);

// Vertices of each connected component, components ordered by their
// smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// Keeps exactly the edges with both endpoints in `vertices`. New indices
// follow ascending old index; labels are preserved. Throws
// std::domain_error on an unknown vertex.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

// True iff the subgraph induced on `vertices` is connected. Throws
// std::domain_error when `vertices` is empty or holds an unknown vertex.
bool is_connected(const Graph& g, std::span<const VertexId> vertices);

// Edge ids with both endpoints in `vertices`, ascending.
std::vector<EdgeId> induced_edges(const Graph& g,
                                  std::span<const VertexId> vertices);

}  // namespace backbone

#endif  // BACKBONE_GRAPH_H_
