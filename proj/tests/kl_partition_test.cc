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

#include "backbone/kl_partition.h"

#include <gtest/gtest.h>

#include <cmath>

#include "backbone/oracles.h"
#include "test_graphs.h"

namespace backbone {
namespace {

using testing::path_graph;
using testing::star_graph;

constexpr double kEps = 1e-9;

void expect_monotone(const PartitionTrace& trace) {
  ASSERT_FALSE(trace.objectives.empty());
  for (std::size_t i = 1; i < trace.objectives.size(); ++i) {
    EXPECT_LE(trace.objectives[i], trace.objectives[i - 1] + kEps);
  }
  EXPECT_LE(trace.iterations, 200);
  if (trace.converged && trace.objectives.size() >= 2) {
    const auto n = trace.objectives.size();
    EXPECT_NEAR(trace.objectives[n - 1], trace.objectives[n - 2], kEps);
  }
}

// Smallest -log LR(u) over every split of the incoming arcs.
double exhaustive_vertex_optimum(const Graph& g, const PathStats& stats,
                                 VertexId u) {
  const std::size_t d = g.degree(u);
  double best = INFINITY;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    IncomingPartition part = IncomingPartition::AllNonBackbone(g, u);
    for (std::size_t i = 0; i < d; ++i) part.backbone[i] = mask >> i & 1;
    best = std::min(best, neg_log_lr_vertex(g, stats, part));
  }
  return best;
}

TEST(BiKlPartition, PathVertexSplitsIntoSingletons) {
  Graph g = path_graph(4);
  PathStats s = canonical_paths_stats(g);
  auto r = bi_kl_partition(g, s, 1, 3);
  EXPECT_NEAR(r.objective, 0.0, kEps);
  EXPECT_NE(r.partition.backbone[0], r.partition.backbone[1]);
  expect_monotone(r.trace);
}

TEST(BiKlPartition, StarCenterIsolatesOneLeaf) {
  Graph g = star_graph(3);
  PathStats s = canonical_paths_stats(g);
  auto r = bi_kl_partition(g, s, 0, 0);
  EXPECT_NEAR(r.objective, 2 * std::log(2.0), kEps);
  int on = r.partition.backbone[0] + r.partition.backbone[1] +
           r.partition.backbone[2];
  EXPECT_TRUE(on == 1 || on == 2);
  EXPECT_NEAR(exhaustive_vertex_optimum(g, s, 0), 2 * std::log(2.0), kEps);
}

TEST(BiKlPartition, SingleIncomingArcIsTrivial) {
  Graph g = path_graph(4);
  PathStats s = canonical_paths_stats(g);
  auto r = bi_kl_partition(g, s, 0, 0);
  EXPECT_EQ(r.objective, 0.0);
  EXPECT_EQ(r.trace.iterations, 0);
  EXPECT_TRUE(r.trace.converged);
  EXPECT_EQ(r.partition.backbone, std::vector<char>{0});
}

TEST(BiKlPartition, RejectsBadArguments) {
  Graph g = path_graph(4);
  PathStats s = canonical_paths_stats(g);
  EXPECT_THROW(bi_kl_partition(g, s, 4, 0), std::domain_error);
  EXPECT_THROW(bi_kl_partition(g, s, -1, 0), std::domain_error);
  PartitionOptions none;
  none.restarts = 0;
  EXPECT_THROW(bi_kl_partition(g, s, 1, 0, none), std::domain_error);
}

TEST(BiKlPartition, ObjectiveMatchesReturnedPartition) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = testing::random_connected(9, 0.3, seed);
    PathStats s = canonical_paths_stats(g);
    for (VertexId u = 0; u < 9; ++u) {
      auto r = bi_kl_partition(g, s, u, seed);
      expect_monotone(r.trace);
      EXPECT_NEAR(r.objective, neg_log_lr_vertex(g, s, r.partition), 1e-9);
      EXPECT_GE(r.objective + kEps, exhaustive_vertex_optimum(g, s, u));
    }
  }
}

TEST(BiKlPartition, SeededDeterminism) {
  Graph g = testing::random_connected(10, 0.3, 8);
  PathStats s = canonical_paths_stats(g);
  for (VertexId u = 0; u < 10; ++u) {
    auto a = bi_kl_partition(g, s, u, 42);
    auto b = bi_kl_partition(g, s, u, 42);
    EXPECT_EQ(a.partition, b.partition);
    EXPECT_EQ(a.trace.objectives, b.trace.objectives);
    EXPECT_EQ(a.trace.seed, 42u);
  }
}

TEST(GbiKlPartition, PathPairTakesBetterAssignment) {
  Graph g = path_graph(4);
  PathStats s = canonical_paths_stats(g);
  std::vector<VertexId> set{1, 2};
  auto r = gbi_kl_partition(g, s, set, 0);
  const EdgeId e = *g.find_edge(1, 2);
  const double off = neg_log_lr_vertexset(g, s, Backbone{set, {}});
  const double on = neg_log_lr_vertexset(g, s, Backbone{set, {e}});
  EXPECT_NEAR(r.objective, std::min(off, on), kEps);
  EXPECT_EQ(r.backbone.edges.empty(), !(on < off - kEps));
  expect_monotone(r.trace);
}

TEST(GbiKlPartition, NoInternalEdges) {
  Graph g = path_graph(4);
  PathStats s = canonical_paths_stats(g);
  std::vector<VertexId> set{0, 2};
  auto r = gbi_kl_partition(g, s, set, 0);
  EXPECT_TRUE(r.backbone.edges.empty());
  EXPECT_EQ(r.trace.iterations, 1);
  const double expected =
      neg_log_lr_vertex(g, s, IncomingPartition::AllNonBackbone(g, 0)) +
      neg_log_lr_vertex(g, s, IncomingPartition::AllNonBackbone(g, 2));
  EXPECT_NEAR(r.objective, expected, kEps);
}

TEST(GbiKlPartition, OutputIsEdgeConsistent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = testing::random_connected(9, 0.35, seed);
    PathStats s = canonical_paths_stats(g);
    std::vector<VertexId> set;
    for (VertexId v = 0; v < 9; ++v) {
      if ((v + seed) % 3 != 0) set.push_back(v);
    }
    auto r = gbi_kl_partition(g, s, set, seed);
    expect_monotone(r.trace);
    EXPECT_EQ(r.partitions, partitions_of(g, r.backbone));
    for (EdgeId e : r.backbone.edges) {
      auto [u, v] = g.edge(e);
      EXPECT_TRUE(std::binary_search(set.begin(), set.end(), u));
      EXPECT_TRUE(std::binary_search(set.begin(), set.end(), v));
    }
    EXPECT_NEAR(r.objective, neg_log_lr_vertexset(g, s, r.backbone), 1e-9);

    double relaxed = 0.0;
    for (VertexId u : set) relaxed += exhaustive_vertex_optimum(g, s, u);
    EXPECT_LE(relaxed, r.objective + kEps);
  }
}

TEST(GbiKlPartition, OracleOptimumIsFixedPoint) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = testing::random_connected(6, 0.3, seed);
    PathStats s = canonical_paths_stats(g);
    auto best = oracle::exact_backbone_oracle(g, s, 3);
    auto r = gbi_kl_partition(g, s, best.backbone.vertices, 0, {},
                              std::span<const EdgeId>(best.backbone.edges));
    EXPECT_EQ(r.backbone, best.backbone) << "seed " << seed;
    EXPECT_NEAR(r.trace.objectives.front(), r.trace.objectives.back(), kEps);
  }
}

TEST(GbiKlPartition, PrecomputedEntropiesGiveSameResult) {
  Graph g = testing::random_connected(10, 0.3, 4);
  PathStats s = canonical_paths_stats(g);
  const auto entropies = row_entropies(g, s);
  ASSERT_EQ(entropies.size(), g.num_arcs());
  std::vector<VertexId> set{0, 1, 2, 3, 4, 5};
  auto plain = gbi_kl_partition(g, s, set, 2);
  auto cached = gbi_kl_partition(g, s, set, 2, {}, std::nullopt, entropies);
  EXPECT_EQ(plain.backbone, cached.backbone);
  EXPECT_EQ(plain.trace.objectives, cached.trace.objectives);
  std::vector<double> wrong(3, 0.0);
  EXPECT_THROW(gbi_kl_partition(g, s, set, 2, {}, std::nullopt, wrong),
               std::domain_error);
}

TEST(GbiKlPartition, RejectsBadInput) {
  Graph g = path_graph(4);
  PathStats s = canonical_paths_stats(g);
  std::vector<VertexId> set{1, 2};
  std::vector<EdgeId> outside{*g.find_edge(0, 1)};
  EXPECT_THROW(gbi_kl_partition(g, s, set, 0, {},
                                std::span<const EdgeId>(outside)),
               std::domain_error);
  EXPECT_THROW(gbi_kl_partition(g, s, std::vector<VertexId>{}, 0),
               std::domain_error);
  EXPECT_THROW(gbi_kl_partition(g, s, std::vector<VertexId>{9}, 0),
               std::domain_error);
}

}  // namespace
}  // namespace backbone
