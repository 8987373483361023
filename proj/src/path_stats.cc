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

#include "backbone/path_stats.h"

#include <algorithm>
#include <ostream>
#include <tuple>
#include <unordered_map>

namespace backbone {

namespace {

// Vertices whose deg^2 table fits under this many cells get a dense
// accumulator; hubs above it fall back to a hash map.
constexpr std::size_t kDenseCells = std::size_t{1} << 14;

class SegmentAccumulator {
 public:
  explicit SegmentAccumulator(const Graph& g) : g_(g) {
    const std::size_t n = g.num_vertices();
    base_.assign(n, kHashed);
    std::size_t cells = 0;
    for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
      const std::size_t d = g.degree(u);
      if (d * d <= kDenseCells) {
        base_[u] = cells;
        cells += d * d;
      }
    }
    dense_.assign(cells, 0);
  }

  void add(VertexId mid, std::size_t in_index, std::size_t out_index,
           std::int64_t count) {
    const std::size_t d = g_.degree(mid);
    const std::size_t cell = in_index * d + out_index;
    if (base_[mid] != kHashed) {
      dense_[base_[mid] + cell] += count;
    } else {
      hashed_[mid][cell] += count;
    }
  }

  void finish(PathStats& stats) const {
    const auto n = static_cast<VertexId>(g_.num_vertices());
    stats.segments.clear();
    stats.segment_offsets.assign(n + 1, 0);
    std::vector<std::pair<std::size_t, std::int64_t>> cells;
    for (VertexId u = 0; u < n; ++u) {
      const std::size_t d = g_.degree(u);
      cells.clear();
      if (base_[u] != kHashed) {
        for (std::size_t c = 0; c < d * d; ++c) {
          if (dense_[base_[u] + c] != 0) cells.emplace_back(c, dense_[base_[u] + c]);
        }
      } else if (auto it = hashed_.find(u); it != hashed_.end()) {
        cells.assign(it->second.begin(), it->second.end());
        std::sort(cells.begin(), cells.end());
      }
      for (auto [cell, count] : cells) {
        const std::size_t i = cell / d;
        const std::size_t j = cell % d;
        stats.segments.push_back(
            {g_.in_arc(u, i), g_.out_begin(u) + static_cast<ArcId>(j), count});
      }
      stats.segment_offsets[u + 1] = stats.segments.size();
    }
  }

 private:
  static constexpr std::size_t kHashed = static_cast<std::size_t>(-1);

  const Graph& g_;
  std::vector<std::size_t> base_;
  std::vector<std::int64_t> dense_;
  std::unordered_map<VertexId, std::unordered_map<std::size_t, std::int64_t>>
      hashed_;
};

}  // namespace

PathStats canonical_paths_stats(const Graph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  const std::size_t arcs = g.num_arcs();
  PathStats stats;
  stats.n_arc.assign(arcs, 0);
  stats.n_start.assign(arcs, 0);
  stats.m_arc.assign(arcs, 0);
  stats.m_vertex.assign(n, 0);
  SegmentAccumulator acc(g);

  std::vector<std::int32_t> dist(n, -1);
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<VertexId> parent(n, -1);
  std::vector<ArcId> parent_arc(n, kNoArc);     // parent(v) -> v
  std::vector<std::size_t> back_index(n, 0);    // index of parent(v) in N(v)
  std::vector<std::int64_t> subtree(n, 0);

  for (VertexId s = 0; s < n; ++s) {
    order.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const VertexId u = order[head];
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
      }
    }
    stats.unreachable_pairs += n - static_cast<std::int64_t>(order.size());
    stats.total_paths += static_cast<std::int64_t>(order.size()) - 1;

    for (std::size_t k = 1; k < order.size(); ++k) {
      const VertexId v = order[k];
      // Neighbors are ascending, so the first one a hop closer is the
      // smallest-index predecessor.
      for (ArcId a = g.out_begin(v); a < g.out_end(v); ++a) {
        if (dist[g.head(a)] == dist[v] - 1) {
          parent[v] = g.head(a);
          parent_arc[v] = g.reverse(a);
          back_index[v] = g.out_index(a);
          break;
        }
      }
      subtree[v] = 1;
    }
    for (std::size_t k = order.size(); k-- > 1;) {
      const VertexId v = order[k];
      const VertexId p = parent[v];
      const std::int64_t through = subtree[v];
      stats.n_arc[parent_arc[v]] += through;
      if (p == s) {
        stats.n_start[parent_arc[v]] += through;
      } else {
        subtree[p] += through;
        acc.add(p, back_index[p], g.out_index(parent_arc[v]), through);
      }
    }
    for (VertexId v : order) dist[v] = -1;
  }

  acc.finish(stats);
  for (const Segment& seg : stats.segments) stats.m_arc[seg.in] += seg.count;
  for (ArcId a = 0; a < static_cast<ArcId>(arcs); ++a) {
    stats.m_vertex[g.tail(a)] += stats.n_arc[a];
  }
  return stats;
}

std::int64_t segment_count(const Graph& g, const PathStats& stats, ArcId in,
                           ArcId out) {
  if (in < 0 || out < 0 || in >= static_cast<ArcId>(g.num_arcs()) ||
      out >= static_cast<ArcId>(g.num_arcs()) || g.head(in) != g.tail(out)) {
    return 0;
  }
  auto group = stats.segments_at(g.head(in));
  auto it = std::lower_bound(group.begin(), group.end(), Segment{in, out, 0},
                             [](const Segment& a, const Segment& b) {
                               return std::tie(a.in, a.out) <
                                      std::tie(b.in, b.out);
                             });
  if (it == group.end() || it->in != in || it->out != out) return 0;
  return it->count;
}

std::vector<std::int64_t> transition_counts(const Graph& g,
                                            const PathStats& stats,
                                            VertexId u) {
  const std::size_t d = g.degree(u);
  std::vector<std::int64_t> table(d * d, 0);
  for (const Segment& seg : stats.segments_at(u)) {
    const std::size_t i = g.out_index(g.reverse(seg.in));
    const std::size_t j = g.out_index(seg.out);
    table[i * d + j] = seg.count;
  }
  return table;
}

std::vector<double> vertex_betweenness(const Graph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  std::vector<double> score(n, 0.0);
  std::vector<std::int32_t> dist(n, -1);
  std::vector<double> sigma(n, 0.0);
  std::vector<double> delta(n, 0.0);
  std::vector<VertexId> order;
  order.reserve(n);

  for (VertexId s = 0; s < n; ++s) {
    order.assign(1, s);
    dist[s] = 0;
    sigma[s] = 1.0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const VertexId u = order[head];
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
      }
    }
    for (std::size_t k = order.size(); k-- > 0;) {
      const VertexId w = order[k];
      for (VertexId v : g.neighbors(w)) {
        if (dist[v] == dist[w] - 1) {
          delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
      }
      if (w != s) score[w] += delta[w];
    }
    for (VertexId v : order) {
      dist[v] = -1;
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
  }
  return score;
}

void write_counters(std::ostream& out, const Graph& g, const PathStats& stats) {
  for (ArcId a = 0; a < static_cast<ArcId>(g.num_arcs()); ++a) {
    out << "ARC " << g.label(g.tail(a)) << ' ' << g.label(g.head(a)) << ' '
        << stats.n_arc[a] << ' ' << stats.n_start[a] << ' ' << stats.m_arc[a]
        << '\n';
  }
  for (const Segment& seg : stats.segments) {
    out << "SEG " << g.label(g.tail(seg.in)) << ' ' << g.label(g.head(seg.in))
        << ' ' << g.label(g.head(seg.out)) << ' ' << seg.count << '\n';
  }
}

}  // namespace backbone
