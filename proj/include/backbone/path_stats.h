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

// Traffic counters over the canonical shortest-path set.
//
// The path set holds one shortest path per ordered reachable pair (s, t),
// s != t. When several shortest paths exist, the canonical one is found by
// walking back from t and always stepping to the smallest-index neighbor
// that is one hop closer to s.

#ifndef BACKBONE_PATH_STATS_H_
#define BACKBONE_PATH_STATS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "backbone/graph.h"

namespace backbone {

// One nonzero consecutive-arc counter: `count` canonical paths traverse
// `in` (w->u) immediately followed by `out` (u->v), v != w.
struct Segment {
  ArcId in = kNoArc;
  ArcId out = kNoArc;
  std::int64_t count = 0;

  bool operator==(const Segment&) const = default;
};

struct PathStats {
  // Ordered pairs (s, t), s != t, with t reachable from s.
  std::int64_t total_paths = 0;
  // Ordered pairs with no path; they contribute nothing.
  std::int64_t unreachable_pairs = 0;

  std::vector<std::int64_t> n_arc;     // paths traversing the arc
  std::vector<std::int64_t> n_start;   // paths whose first arc it is
  std::vector<std::int64_t> m_arc;     // paths continuing after the arc
  std::vector<std::int64_t> m_vertex;  // paths leaving the vertex

  // Nonzero segment counters grouped by middle vertex; within a group they
  // are sorted by (in, out), which is also incoming-index then
  // outgoing-index order.
  std::vector<Segment> segments;
  std::vector<std::size_t> segment_offsets;  // num_vertices + 1 entries

  std::span<const Segment> segments_at(VertexId u) const {
    return {segments.data() + segment_offsets[u],
            segments.data() + segment_offsets[u + 1]};
  }

  bool operator==(const PathStats&) const = default;
};

// All counters in one pass of |V| breadth-first searches.
PathStats canonical_paths_stats(const Graph& g);

// N_{in,out}; zero when the pair never occurs or the arcs are not
// consecutive.
std::int64_t segment_count(const Graph& g, const PathStats& stats, ArcId in,
                           ArcId out);

// Row-major deg(u) x deg(u) table: row i is the incoming arc from
// neighbors(u)[i], column j the outgoing arc to neighbors(u)[j].
std::vector<std::int64_t> transition_counts(const Graph& g,
                                            const PathStats& stats,
                                            VertexId u);

// Brandes vertex betweenness over ordered pairs (twice the undirected
// convention), endpoints excluded.
std::vector<double> vertex_betweenness(const Graph& g);

// Debug dump, ordered by arc id and then by segment:
//   ARC u v N Nstart M
//   SEG u v w count      (arcs u->v then v->w)
void write_counters(std::ostream& out, const Graph& g, const PathStats& stats);

}  // namespace backbone

#endif  // BACKBONE_PATH_STATS_H_
