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

// Small graphs shared by the tests.

#ifndef BACKBONE_TESTS_TEST_GRAPHS_H_
#define BACKBONE_TESTS_TEST_GRAPHS_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "backbone/graph.h"

namespace backbone::testing {

using EdgePairs = std::vector<std::pair<VertexId, VertexId>>;

inline Graph make_graph(int n, const EdgePairs& edges) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Graph::FromEdges(std::move(labels), edges);
}

inline Graph path_graph(int n) {
  EdgePairs e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

// Center 0, leaves 1..leaves.
inline Graph star_graph(int leaves) {
  EdgePairs e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_graph(leaves + 1, e);
}

inline Graph cycle_graph(int n) {
  EdgePairs e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    int parent = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    edges.emplace(std::min(parent, order[i]), std::max(parent, order[i]));
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace(u, v);
    }
  }
  return make_graph(n, EdgePairs(edges.begin(), edges.end()));
}

// Every connected graph on 1..max_n vertices, one per isomorphism class.
inline std::vector<Graph> connected_catalog(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const int m = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> bit_of(n, std::vector<int>(n, -1));
    for (int i = 0; i < m; ++i) {
      bit_of[pairs[i].first][pairs[i].second] = i;
      bit_of[pairs[i].second][pairs[i].first] = i;
    }
    // For every vertex permutation, where each edge bit goes.
    std::vector<std::vector<int>> moves;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> move(m);
      for (int i = 0; i < m; ++i) {
        move[i] = bit_of[perm[pairs[i].first]][perm[pairs[i].second]];
      }
      moves.push_back(std::move(move));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
      EdgePairs edges;
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1) edges.push_back(pairs[i]);
      }
      Graph g = make_graph(n, edges);
      if (connected_components(g).size() != 1) continue;
      std::uint32_t canon = mask;
      for (const auto& move : moves) {
        std::uint32_t image = 0;
        for (int i = 0; i < m; ++i) {
          if (mask >> i & 1) image |= std::uint32_t{1} << move[i];
        }
        canon = std::min(canon, image);
      }
      if (seen.insert(canon).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace backbone::testing

#endif  // BACKBONE_TESTS_TEST_GRAPHS_H_
