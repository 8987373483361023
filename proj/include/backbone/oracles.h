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

// Exhaustive reference implementations for small graphs. They share no
// code with the production algorithms beyond Graph and the likelihood
// evaluation, and are only meant for tests.

#ifndef BACKBONE_ORACLES_H_
#define BACKBONE_ORACLES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "backbone/graph.h"
#include "backbone/likelihood.h"
#include "backbone/path_stats.h"

namespace backbone::oracle {

// Counters from explicit path enumeration: every simple path per pair,
// keep the shortest, pick the canonical one by comparing the paths read
// backwards from the target. Throws std::domain_error above 12 vertices.
PathStats brute_force_stats(const Graph& g);

// The canonical path of every reachable ordered pair, as vertex sequences,
// by the same enumeration as brute_force_stats.
std::vector<std::vector<VertexId>> canonical_paths(const Graph& g);

// Bimodal log-likelihood accumulated path by path: the first arc from the
// first-arc law, every later arc from the conditional law at its tail, or
// from the class centroid when the tail has a partition.
double loglik_by_paths(const Graph& g, const PathStats& stats,
                       const VertexPartitions& parts,
                       const CentroidTable& centroids);

// Betweenness from counting every shortest path explicitly.
std::vector<double> brute_force_betweenness(const Graph& g);

// Every connected vertex set of size k, each once, ascending inside.
std::vector<std::vector<VertexId>> connected_subsets(const Graph& g,
                                                     std::size_t k);

struct McgSolution {
  std::vector<VertexId> vertices;
  double weight = 0.0;
};

// Throws std::domain_error above 14 vertices and InfeasibleError when no
// connected k-set exists. Ties go to the lexicographically smallest set.
McgSolution exact_mcg_oracle(const Graph& g, std::span<const double> weights,
                             std::size_t k);

struct BackboneSolution {
  Backbone backbone;
  double loglik = 0.0;
};

// Global maximum of the bimodal log-likelihood over connected K-sets and
// all edge assignments inside them. Within 1e-9 ties prefer the smaller
// vertex set, then fewer edges, then the smaller edge list. Throws
// std::domain_error above 8 vertices or K > 5.
BackboneSolution exact_backbone_oracle(const Graph& g, const PathStats& stats,
                                       std::size_t k);

// Fewest edges of any tree in g spanning the terminals. Throws
// std::domain_error above 12 vertices, InfeasibleError when disconnected.
std::size_t steiner_optimum_edges(const Graph& g,
                                  std::span<const VertexId> terminals);

}  // namespace backbone::oracle

#endif  // BACKBONE_ORACLES_H_
