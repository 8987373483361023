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

#include "backbone/oracles.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace backbone::oracle {

namespace {

using Path = std::vector<VertexId>;

void all_simple_paths(const Graph& g, VertexId t, Path& path,
                      std::vector<char>& on_path, std::vector<Path>& out) {
  const VertexId u = path.back();
  if (u == t) {
    out.push_back(path);
    return;
  }
  for (VertexId w : g.neighbors(u)) {
    if (on_path[w]) continue;
    on_path[w] = 1;
    path.push_back(w);
    all_simple_paths(g, t, path, on_path, out);
    path.pop_back();
    on_path[w] = 0;
  }
}

// All shortest s-t paths; empty when t is unreachable.
std::vector<Path> shortest_paths(const Graph& g, VertexId s, VertexId t) {
  std::vector<Path> all;
  Path path{s};
  std::vector<char> on_path(g.num_vertices(), 0);
  on_path[s] = 1;
  all_simple_paths(g, t, path, on_path, all);
  if (all.empty()) return all;
  std::size_t shortest = all.front().size();
  for (const Path& p : all) shortest = std::min(shortest, p.size());
  std::erase_if(all, [&](const Path& p) { return p.size() != shortest; });
  return all;
}

std::uint32_t mask_of(std::span<const VertexId> vertices) {
  std::uint32_t mask = 0;
  for (VertexId v : vertices) mask |= std::uint32_t{1} << v;
  return mask;
}

std::vector<VertexId> members(std::uint32_t mask) {
  std::vector<VertexId> out;
  for (VertexId v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

std::uint32_t neighborhood(const Graph& g, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (VertexId v : members(mask)) {
    for (VertexId w : g.neighbors(v)) out |= std::uint32_t{1} << w;
  }
  return out;
}

// Grow-with-exclusion: extensions only come from the exclusive
// neighborhood of the newest vertex and must exceed the root.
void extend(const Graph& g, std::size_t k, VertexId root, std::uint32_t set,
            std::uint32_t ext, std::vector<std::vector<VertexId>>& out) {
  if (static_cast<std::size_t>(__builtin_popcount(set)) == k) {
    out.push_back(members(set));
    return;
  }
  const std::uint32_t closed = set | neighborhood(g, set);
  while (ext != 0) {
    const VertexId w = __builtin_ctz(ext);
    ext &= ext - 1;
    std::uint32_t next = ext;
    for (VertexId x : g.neighbors(w)) {
      const std::uint32_t bit = std::uint32_t{1} << x;
      if (x > root && !(closed & bit)) next |= bit;
    }
    extend(g, k, root, set | (std::uint32_t{1} << w), next, out);
  }
}

bool connected_mask(const Graph& g, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t seen = mask & (~mask + 1);
  for (;;) {
    const std::uint32_t grown = (seen | neighborhood(g, seen)) & mask;
    if (grown == seen) break;
    seen = grown;
  }
  return seen == mask;
}

}  // namespace

std::vector<std::vector<VertexId>> canonical_paths(const Graph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  if (n > 12) throw std::domain_error("brute force limited to 12 vertices");
  std::vector<Path> out;
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = 0; t < n; ++t) {
      if (s == t) continue;
      auto paths = shortest_paths(g, s, t);
      if (paths.empty()) continue;
      out.push_back(*std::min_element(
          paths.begin(), paths.end(), [](const Path& a, const Path& b) {
            return std::lexicographical_compare(a.rbegin(), a.rend(),
                                                b.rbegin(), b.rend());
          }));
    }
  }
  return out;
}

PathStats brute_force_stats(const Graph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  if (n > 12) throw std::domain_error("brute force limited to 12 vertices");
  PathStats stats;
  stats.n_arc.assign(g.num_arcs(), 0);
  stats.n_start.assign(g.num_arcs(), 0);
  stats.m_arc.assign(g.num_arcs(), 0);
  stats.m_vertex.assign(n, 0);
  std::map<std::tuple<VertexId, ArcId, ArcId>, std::int64_t> segments;

  const auto paths = canonical_paths(g);
  stats.total_paths = static_cast<std::int64_t>(paths.size());
  stats.unreachable_pairs =
      static_cast<std::int64_t>(n) * (n - 1) - stats.total_paths;
  for (const Path& path : paths) {
    std::vector<ArcId> arcs;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      arcs.push_back(g.find_arc(path[i], path[i + 1]));
    }
    stats.n_start[arcs.front()] += 1;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      stats.n_arc[arcs[i]] += 1;
      stats.m_vertex[g.tail(arcs[i])] += 1;
      if (i + 1 < arcs.size()) {
        stats.m_arc[arcs[i]] += 1;
        segments[{g.head(arcs[i]), arcs[i], arcs[i + 1]}] += 1;
      }
    }
  }

  stats.segment_offsets.assign(n + 1, 0);
  for (const auto& [key, count] : segments) {
    const auto& [mid, in, out] = key;
    stats.segments.push_back({in, out, count});
    ++stats.segment_offsets[mid + 1];
  }
  for (VertexId v = 0; v < n; ++v) {
    stats.segment_offsets[v + 1] += stats.segment_offsets[v];
  }
  return stats;
}

double loglik_by_paths(const Graph& g, const PathStats& stats,
                       const VertexPartitions& parts,
                       const CentroidTable& centroids) {
  std::vector<std::int32_t> slot(g.num_vertices(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    slot[parts[i].vertex] = static_cast<std::int32_t>(i);
  }
  double total = 0.0;
  for (const Path& path : canonical_paths(g)) {
    const ArcId first = g.find_arc(path[0], path[1]);
    std::int64_t starts = 0;
    for (ArcId a = g.out_begin(path[0]); a < g.out_end(path[0]); ++a) {
      starts += stats.n_start[a];
    }
    total += std::log(static_cast<double>(stats.n_start[first]) /
                      static_cast<double>(starts));
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const ArcId in = g.find_arc(path[i - 1], path[i]);
      const ArcId out = g.find_arc(path[i], path[i + 1]);
      const VertexId u = path[i];
      double p;
      if (slot[u] < 0) {
        p = static_cast<double>(segment_count(g, stats, in, out)) /
            static_cast<double>(stats.m_arc[in]);
      } else {
        const auto& part = parts[slot[u]];
        const auto& row = centroids[slot[u]];
        const std::size_t k = g.out_index(g.reverse(in));
        const auto& law = part.backbone[k] ? row.backbone : row.non_backbone;
        p = law.empty() ? 0.0 : law[g.out_index(out)];
      }
      total += std::log(p);
    }
  }
  return total;
}

std::vector<double> brute_force_betweenness(const Graph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  if (n > 12) throw std::domain_error("brute force limited to 12 vertices");
  std::vector<double> score(n, 0.0);
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = 0; t < n; ++t) {
      if (s == t) continue;
      auto paths = shortest_paths(g, s, t);
      for (const Path& p : paths) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
          score[p[i]] += 1.0 / static_cast<double>(paths.size());
        }
      }
    }
  }
  return score;
}

std::vector<std::vector<VertexId>> connected_subsets(const Graph& g,
                                                     std::size_t k) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  if (n > 31) throw std::domain_error("enumeration limited to 31 vertices");
  std::vector<std::vector<VertexId>> out;
  if (k == 0) return out;
  for (VertexId root = 0; root < n; ++root) {
    std::uint32_t ext = 0;
    for (VertexId w : g.neighbors(root)) {
      if (w > root) ext |= std::uint32_t{1} << w;
    }
    extend(g, k, root, std::uint32_t{1} << root, ext, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

McgSolution exact_mcg_oracle(const Graph& g, std::span<const double> weights,
                             std::size_t k) {
  if (g.num_vertices() > 14) {
    throw std::domain_error("exact MCG limited to 14 vertices");
  }
  if (weights.size() != g.num_vertices()) {
    throw std::domain_error("one weight per vertex required");
  }
  std::optional<McgSolution> best;
  for (auto& set : connected_subsets(g, k)) {
    double w = 0.0;
    for (VertexId v : set) w += weights[v];
    if (!best || w > best->weight) best = McgSolution{std::move(set), w};
  }
  if (!best) throw InfeasibleError("no connected set of that size");
  return *std::move(best);
}

BackboneSolution exact_backbone_oracle(const Graph& g, const PathStats& stats,
                                       std::size_t k) {
  if (g.num_vertices() > 8 || k > 5) {
    throw std::domain_error("exact backbone limited to 8 vertices, K <= 5");
  }
  constexpr double kTie = 1e-9;
  std::optional<BackboneSolution> best;
  auto better = [&](const BackboneSolution& a, const BackboneSolution& b) {
    if (a.loglik > b.loglik + kTie) return true;
    if (a.loglik < b.loglik - kTie) return false;
    if (a.backbone.vertices != b.backbone.vertices) {
      return a.backbone.vertices < b.backbone.vertices;
    }
    if (a.backbone.edges.size() != b.backbone.edges.size()) {
      return a.backbone.edges.size() < b.backbone.edges.size();
    }
    return a.backbone.edges < b.backbone.edges;
  };
  for (const auto& set : connected_subsets(g, k)) {
    const auto inner = induced_edges(g, set);
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << inner.size());
         ++pick) {
      BackboneSolution candidate;
      candidate.backbone.vertices = set;
      for (std::size_t i = 0; i < inner.size(); ++i) {
        if (pick >> i & 1) candidate.backbone.edges.push_back(inner[i]);
      }
      candidate.loglik = loglik_bimodal(g, stats, candidate.backbone);
      if (!best || better(candidate, *best)) best = std::move(candidate);
    }
  }
  if (!best) throw InfeasibleError("no connected set of that size");
  return *std::move(best);
}

std::size_t steiner_optimum_edges(const Graph& g,
                                  std::span<const VertexId> terminals) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  if (n > 12) throw std::domain_error("Steiner oracle limited to 12 vertices");
  const std::uint32_t required = mask_of(terminals);
  std::optional<std::size_t> best;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if ((mask & required) != required) continue;
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (best && size - 1 >= *best) continue;
    if (connected_mask(g, mask)) best = size - 1;
  }
  if (!best) throw InfeasibleError("terminals are not connected");
  return *best;
}

}  // namespace backbone::oracle
