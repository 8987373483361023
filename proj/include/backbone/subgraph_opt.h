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

// Connected-subgraph search: maximum weight connected k-subgraph and the
// metric-closure Steiner tree.

#ifndef BACKBONE_SUBGRAPH_OPT_H_
#define BACKBONE_SUBGRAPH_OPT_H_

#include <cstddef>
#include <span>
#include <vector>

#include "backbone/graph.h"

namespace backbone {

// Seeded greedy growth. Seeds are taken by decreasing weight (ties to the
// smaller index); `seeds_to_try` == 0 means min(|V|, 2k). Each seed grows
// by repeatedly adding the heaviest vertex adjacent to the set. Returns
// the best set, ascending; ties go to the lexicographically smaller set.
//
// Throws std::domain_error unless 1 <= k <= |V| and weights has one entry
// per vertex, and InfeasibleError when no component holds k vertices.
std::vector<VertexId> mcg_heuristic(const Graph& g,
                                    std::span<const double> weights,
                                    std::size_t k,
                                    std::size_t seeds_to_try = 0);

double set_weight(std::span<const double> weights,
                  std::span<const VertexId> vertices);

struct SteinerTree {
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending
};

// Shortest-path metric closure over the terminals, its minimum spanning
// tree expanded into graph paths, then a spanning tree of the union with
// non-terminal leaves pruned. Throws std::domain_error on an empty or
// out-of-range terminal set and InfeasibleError when the terminals are
// not in one component.
SteinerTree steiner_approx(const Graph& g, std::span<const VertexId> terminals);

}  // namespace backbone

#endif  // BACKBONE_SUBGRAPH_OPT_H_
