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

#include "backbone/subgraph_opt.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

namespace backbone {

namespace {

std::vector<std::size_t> component_sizes(const Graph& g,
                                         std::vector<std::int32_t>& comp) {
  comp.assign(g.num_vertices(), -1);
  std::vector<std::size_t> sizes;
  for (const auto& c : connected_components(g)) {
    for (VertexId v : c) comp[v] = static_cast<std::int32_t>(sizes.size());
    sizes.push_back(c.size());
  }
  return sizes;
}

// Greedy growth from `seed`: the frontier is a max-heap on weight with the
// smaller index winning ties.
std::vector<VertexId> grow(const Graph& g, std::span<const double> weights,
                           VertexId seed, std::size_t k,
                           std::vector<char>& mark) {
  auto lighter = [&](VertexId a, VertexId b) {
    if (weights[a] != weights[b]) return weights[a] < weights[b];
    return a > b;
  };
  std::priority_queue<VertexId, std::vector<VertexId>, decltype(lighter)>
      frontier(lighter);
  std::vector<VertexId> set{seed};
  std::vector<VertexId> touched{seed};
  mark[seed] = 1;
  auto expand = [&](VertexId v) {
    for (VertexId w : g.neighbors(v)) {
      if (!mark[w]) {
        mark[w] = 1;
        touched.push_back(w);
        frontier.push(w);
      }
    }
  };
  expand(seed);
  while (set.size() < k && !frontier.empty()) {
    VertexId v = frontier.top();
    frontier.pop();
    set.push_back(v);
    expand(v);
  }
  for (VertexId v : touched) mark[v] = 0;
  std::sort(set.begin(), set.end());
  return set;
}

void check_vertex(const Graph& g, VertexId v) {
  if (v < 0 || v >= static_cast<VertexId>(g.num_vertices())) {
    throw std::domain_error("vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

double set_weight(std::span<const double> weights,
                  std::span<const VertexId> vertices) {
  double total = 0.0;
  for (VertexId v : vertices) total += weights[v];
  return total;
}

std::vector<VertexId> mcg_heuristic(const Graph& g,
                                    std::span<const double> weights,
                                    std::size_t k, std::size_t seeds_to_try) {
  const std::size_t n = g.num_vertices();
  if (weights.size() != n) {
    throw std::domain_error("one weight per vertex required");
  }
  if (k < 1 || k > n) {
    throw std::domain_error("k must be in [1, |V|]");
  }
  if (seeds_to_try == 0) seeds_to_try = std::min(n, 2 * k);

  std::vector<std::int32_t> comp;
  const auto sizes = component_sizes(g, comp);

  std::vector<VertexId> ranked(n);
  std::iota(ranked.begin(), ranked.end(), 0);
  std::stable_sort(ranked.begin(), ranked.end(), [&](VertexId a, VertexId b) {
    return weights[a] > weights[b];
  });

  std::vector<char> mark(n, 0);
  std::optional<std::vector<VertexId>> best;
  double best_weight = 0.0;
  std::size_t tried = 0;
  for (VertexId seed : ranked) {
    if (tried == seeds_to_try) break;
    if (sizes[comp[seed]] < k) continue;
    ++tried;
    auto set = grow(g, weights, seed, k, mark);
    const double w = set_weight(weights, set);
    if (!best || w > best_weight || (w == best_weight && set < *best)) {
      best = std::move(set);
      best_weight = w;
    }
  }
  if (!best) {
    throw InfeasibleError("no connected component has " + std::to_string(k) +
                          " vertices");
  }
  return *std::move(best);
}

SteinerTree steiner_approx(const Graph& g, std::span<const VertexId> terminals) {
  if (terminals.empty()) throw std::domain_error("empty terminal set");
  std::vector<VertexId> term(terminals.begin(), terminals.end());
  for (VertexId v : term) check_vertex(g, v);
  std::sort(term.begin(), term.end());
  term.erase(std::unique(term.begin(), term.end()), term.end());
  if (term.size() == 1) return {term, {}};

  const std::size_t n = g.num_vertices();
  const std::size_t t = term.size();
  // Breadth-first distances and canonical parents from every terminal.
  std::vector<std::vector<std::int32_t>> dist(t, std::vector<std::int32_t>(n, -1));
  std::vector<std::vector<VertexId>> parent(t, std::vector<VertexId>(n, -1));
  std::vector<VertexId> queue;
  for (std::size_t i = 0; i < t; ++i) {
    auto& d = dist[i];
    queue.assign(1, term[i]);
    d[term[i]] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (VertexId w : g.neighbors(u)) {
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          parent[i][w] = u;
          queue.push_back(w);
        }
      }
    }
    for (VertexId v : queue) {
      if (v == term[i]) continue;
      for (VertexId w : g.neighbors(v)) {
        if (d[w] == d[v] - 1) {
          parent[i][v] = w;
          break;
        }
      }
    }
  }
  for (std::size_t j = 1; j < t; ++j) {
    if (dist[0][term[j]] < 0) {
      throw InfeasibleError("terminals are not in one connected component");
    }
  }

  // Prim over the terminal metric closure.
  constexpr std::int32_t kFar = std::numeric_limits<std::int32_t>::max();
  std::vector<char> in_tree(t, 0);
  std::vector<std::int32_t> key(t, kFar);
  std::vector<std::size_t> from(t, 0);
  std::vector<char> on_vertex(n, 0);
  std::vector<char> on_edge(g.num_edges(), 0);
  key[0] = 0;
  for (std::size_t step = 0; step < t; ++step) {
    std::size_t pick = t;
    for (std::size_t j = 0; j < t; ++j) {
      if (!in_tree[j] && (pick == t || key[j] < key[pick])) pick = j;
    }
    in_tree[pick] = 1;
    on_vertex[term[pick]] = 1;
    if (step > 0) {
      const std::size_t src = from[pick];
      for (VertexId v = term[pick]; v != term[src]; v = parent[src][v]) {
        on_vertex[v] = 1;
        on_vertex[parent[src][v]] = 1;
        on_edge[*g.find_edge(v, parent[src][v])] = 1;
      }
    }
    for (std::size_t j = 0; j < t; ++j) {
      if (!in_tree[j] && dist[pick][term[j]] < key[j]) {
        key[j] = dist[pick][term[j]];
        from[j] = pick;
      }
    }
  }

  // Spanning tree of the union, then strip non-terminal leaves.
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> adj(n);
  std::vector<EdgeId> tree_edges;
  queue.assign(1, term[0]);
  seen[term[0]] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (ArcId a = g.out_begin(u); a < g.out_end(u); ++a) {
      const VertexId w = g.head(a);
      if (!on_edge[g.edge_of(a)] || seen[w]) continue;
      seen[w] = 1;
      queue.push_back(w);
      tree_edges.push_back(g.edge_of(a));
      adj[u].push_back(w);
      adj[w].push_back(u);
    }
  }
  std::vector<char> is_terminal(n, 0);
  for (VertexId v : term) is_terminal[v] = 1;
  std::vector<std::size_t> degree(n, 0);
  for (VertexId v : queue) degree[v] = adj[v].size();
  std::vector<char> alive(n, 0);
  for (VertexId v : queue) alive[v] = 1;
  std::vector<VertexId> leaves;
  for (VertexId v : queue) {
    if (degree[v] == 1 && !is_terminal[v]) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const VertexId v = leaves.back();
    leaves.pop_back();
    alive[v] = 0;
    for (VertexId w : adj[v]) {
      if (alive[w] && --degree[w] == 1 && !is_terminal[w]) leaves.push_back(w);
    }
  }

  SteinerTree tree;
  for (VertexId v : queue) {
    if (alive[v]) tree.vertices.push_back(v);
  }
  for (EdgeId e : tree_edges) {
    auto [u, v] = g.edge(e);
    if (alive[u] && alive[v]) tree.edges.push_back(e);
  }
  std::sort(tree.vertices.begin(), tree.vertices.end());
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

}  // namespace backbone
