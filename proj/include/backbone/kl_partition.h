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

// Two-cluster KL k-means over incoming arcs.
//
// bi_kl_partition clusters the incoming arcs of a single vertex.
// gbi_kl_partition clusters the edges inside a vertex set, moving both arcs
// of an edge together; arcs entering the set from outside stay
// non-backbone.

#ifndef BACKBONE_KL_PARTITION_H_
#define BACKBONE_KL_PARTITION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "backbone/graph.h"
#include "backbone/likelihood.h"
#include "backbone/path_stats.h"

namespace backbone {

struct PartitionTrace {
  // objectives[0] is the initial assignment, then one value per sweep.
  std::vector<double> objectives;
  int iterations = 0;
  bool converged = false;
  std::uint64_t seed = 0;
};

struct PartitionOptions {
  int restarts = 5;
  int max_iters = 200;
  double tolerance = 1e-9;
};

struct VertexPartitionResult {
  IncomingPartition partition;
  CentroidRow centroids;
  double objective = 0.0;
  PartitionTrace trace;
};

// Best of `restarts` seeded runs. Throws std::domain_error when u is out of
// range or restarts < 1.
VertexPartitionResult bi_kl_partition(const Graph& g, const PathStats& stats,
                                      VertexId u, std::uint64_t seed,
                                      const PartitionOptions& options = {});

struct SetPartitionResult {
  Backbone backbone;  // the vertex set and its backbone edges
  VertexPartitions partitions;
  CentroidTable centroids;
  double objective = 0.0;  // -log LR over the whole set
  PartitionTrace trace;
};

// Sum of n log(n / M) over the continuation row of every arc, indexed by
// arc. Passing it to gbi_kl_partition saves recomputing it on every call.
std::vector<double> row_entropies(const Graph& g, const PathStats& stats);

// `init` lists the edges starting in the backbone class; when given, the
// run is deterministic and restarts are not used. Throws
// std::domain_error on an empty or out-of-range vertex set or an init edge
// that is not inside the set.
SetPartitionResult gbi_kl_partition(
    const Graph& g, const PathStats& stats, std::span<const VertexId> vertices,
    std::uint64_t seed, const PartitionOptions& options = {},
    std::optional<std::span<const EdgeId>> init = std::nullopt,
    std::span<const double> row_entropies = {});

}  // namespace backbone

#endif  // BACKBONE_KL_PARTITION_H_
