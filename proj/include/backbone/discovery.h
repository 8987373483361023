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

// End-to-end backbone discovery.
//
//  vb:   top-K betweenness vertices, joined by a Steiner tree and trimmed
//        back to K vertices; every induced edge is a backbone edge.
//  mcg:  per-vertex benefit F(u) from Bi-KL, a maximum weight connected
//        K-subgraph over F, then GBi-KL on it.
//  iter: mcg followed by randomized swap refinement.

#ifndef BACKBONE_DISCOVERY_H_
#define BACKBONE_DISCOVERY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/graph.h"
#include "backbone/kl_partition.h"
#include "backbone/likelihood.h"
#include "backbone/path_stats.h"

namespace backbone {

enum class Method { kVb, kMcg, kIter };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct DiscoveryConfig {
  Method method = Method::kMcg;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  int restarts = 5;
  std::size_t max_refine_iters = 0;  // 0 selects 10 |V|
  double tolerance = 1e-9;
};

// One refinement step: the relaxed bound of the current candidate, its
// consistent benefit and the best consistent benefit so far.
struct RefineStep {
  double w_high = 0.0;
  double w_low = 0.0;
  double w_best = 0.0;
};

struct Timings {
  double preprocess_seconds = 0.0;
  double discover_seconds = 0.0;
};

struct DiscoveryResult {
  Backbone backbone;
  ModelReport report;
  // Sum of F'(u) over the backbone at its own centroids.
  double w = 0.0;
  // GBi-KL objectives of the final partition run (vb: the single
  // -log LR value of its backbone).
  std::vector<double> objectives;
  std::vector<RefineStep> refine_trace;  // iter only
  Timings timings;
};

// Throws std::invalid_argument when k == 0 or restarts < 1 and
// InfeasibleError when no component has k vertices.
void validate(const Graph& g, const DiscoveryConfig& config);

// F(u) for every vertex: the benefit of its best Bi-KL split.
std::vector<double> vertex_benefits(const Graph& g, const PathStats& stats,
                                    std::uint64_t seed, int restarts);

// Sum of F'(u) over the backbone, at the ML centroids of its edge classes.
double backbone_benefit(const Graph& g, const PathStats& stats,
                        const Backbone& b);

DiscoveryResult discover_vb(const Graph& g, const PathStats& stats,
                            std::size_t k);
DiscoveryResult discover_mcg(const Graph& g, const PathStats& stats,
                             std::size_t k, std::uint64_t seed, int restarts);
DiscoveryResult discover_iter(const Graph& g, const PathStats& stats,
                              std::size_t k, std::uint64_t seed, int restarts,
                              std::size_t max_refine_iters = 0,
                              double tolerance = 1e-9);

// Validates, dispatches on config.method and fills discover_seconds.
DiscoveryResult discover(const Graph& g, const PathStats& stats,
                         const DiscoveryConfig& config);
// Same, computing the path counters first (preprocess_seconds).
DiscoveryResult discover(const Graph& g, const DiscoveryConfig& config);

}  // namespace backbone

#endif  // BACKBONE_DISCOVERY_H_
