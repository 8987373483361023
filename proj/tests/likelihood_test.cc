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

#include "backbone/likelihood.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "backbone/oracles.h"
#include "test_graphs.h"

namespace backbone {
namespace {

using testing::make_graph;
using testing::path_graph;
using testing::star_graph;

constexpr double kEps = 1e-9;

struct Fixture {
  explicit Fixture(Graph graph)
      : g(std::move(graph)), stats(canonical_paths_stats(g)) {}
  Graph g;
  PathStats stats;
};

// Star center with leaf 1 split off from leaves 2 and 3.
IncomingPartition star_split() {
  return {0, {1, 0, 0}};
}

TEST(FitIndependent, Examples) {
  Fixture p4(path_graph(4));
  auto p = fit_independent(p4.g, p4.stats);
  EXPECT_NEAR(p[p4.g.find_arc(1, 2)], 4.0 / 7.0, kEps);
  EXPECT_NEAR(p[p4.g.find_arc(1, 0)], 3.0 / 7.0, kEps);

  Fixture star(star_graph(3));
  p = fit_independent(star.g, star.stats);
  for (VertexId leaf = 1; leaf <= 3; ++leaf) {
    EXPECT_NEAR(p[star.g.find_arc(0, leaf)], 1.0 / 3.0, kEps);
  }
  Fixture pair(path_graph(2));
  EXPECT_EQ(fit_independent(pair.g, pair.stats)[0], 1.0);
}

TEST(FitMarkovian, Examples) {
  Fixture p4(path_graph(4));
  const Graph& g = p4.g;
  EXPECT_EQ(*conditional_probability(g, p4.stats, g.find_arc(0, 1),
                                     g.find_arc(1, 2)),
            1.0);
  EXPECT_EQ(*conditional_probability(g, p4.stats, g.find_arc(0, 1),
                                     g.find_arc(1, 0)),
            0.0);

  Fixture star(star_graph(3));
  EXPECT_NEAR(*conditional_probability(star.g, star.stats,
                                       star.g.find_arc(2, 0),
                                       star.g.find_arc(0, 3)),
              0.5, kEps);

  Fixture tri(testing::cycle_graph(3));
  for (ArcId a = 0; a < 6; ++a) {
    for (ArcId b = 0; b < 6; ++b) {
      if (tri.g.head(a) == tri.g.tail(b)) {
        EXPECT_FALSE(conditional_probability(tri.g, tri.stats, a, b));
      }
    }
  }
  MarkovianFit fit = fit_markovian(tri.g, tri.stats);
  EXPECT_TRUE(fit.conditional.empty());
  for (const auto& p0 : fit.first_arc) EXPECT_NEAR(*p0, 0.5, kEps);
}

TEST(LoglikMarkovian, Examples) {
  Fixture tri(testing::cycle_graph(3));
  EXPECT_NEAR(loglik_markovian(tri.g, tri.stats), 6 * std::log(0.5), kEps);
  Fixture pair(path_graph(2));
  EXPECT_EQ(loglik_markovian(pair.g, pair.stats), 0.0);
  Fixture p4(path_graph(4));
  EXPECT_NEAR(loglik_markovian(p4.g, p4.stats),
              first_arc_loglik(p4.g, p4.stats), kEps);
}

TEST(LoglikIndependent, MatchesDirectSum) {
  Fixture p4(path_graph(4));
  // Vertex 1 and 2 emit 7 traversals split 3/4; the leaves emit 3 each.
  const double expected = 2 * (3 * std::log(3.0 / 7) + 4 * std::log(4.0 / 7));
  EXPECT_NEAR(loglik_independent(p4.g, p4.stats), expected, kEps);
}

TEST(LoglikBimodal, EmptyBackboneIsMarkovian) {
  Fixture f(testing::random_connected(8, 0.3, 3));
  EXPECT_EQ(loglik_bimodal(f.g, f.stats, Backbone{}),
            loglik_markovian(f.g, f.stats));
}

TEST(LoglikBimodal, StarSplitCostsTwoLogTwo) {
  Fixture star(star_graph(3));
  VertexPartitions parts{star_split()};
  EXPECT_NEAR(loglik_bimodal(star.g, star.stats, parts) -
                  loglik_markovian(star.g, star.stats),
              -2 * std::log(2.0), kEps);
}

TEST(LoglikBimodal, AgreesWithPathByPathProduct) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Fixture f(testing::random_connected(7, 0.3, seed));
    std::mt19937_64 rng(seed);
    VertexPartitions parts;
    for (VertexId u = 0; u < 7; u += 2) {
      IncomingPartition part = IncomingPartition::AllNonBackbone(f.g, u);
      for (auto& c : part.backbone) c = rng() % 2;
      parts.push_back(part);
    }
    auto centroids = ml_centroids(f.g, f.stats, parts);
    EXPECT_NEAR(loglik_bimodal(f.g, f.stats, parts, centroids),
                oracle::loglik_by_paths(f.g, f.stats, parts, centroids), 1e-9);
  }
}

TEST(LoglikBimodal, RejectsMalformedPartitions) {
  Fixture p4(path_graph(4));
  VertexPartitions bad{{1, {1}}};
  EXPECT_THROW(loglik_bimodal(p4.g, p4.stats, bad), std::domain_error);
  VertexPartitions unsorted{IncomingPartition::AllNonBackbone(p4.g, 2),
                            IncomingPartition::AllNonBackbone(p4.g, 1)};
  EXPECT_THROW(loglik_bimodal(p4.g, p4.stats, unsorted), std::domain_error);
  std::vector<ArcId> wrong{p4.g.find_arc(1, 2)};
  EXPECT_THROW(IncomingPartition::FromArcs(p4.g, 1, wrong), std::domain_error);
}

TEST(NegLogLrVertex, Examples) {
  Fixture p4(path_graph(4));
  std::vector<ArcId> from0{p4.g.find_arc(0, 1)};
  auto split = IncomingPartition::FromArcs(p4.g, 1, from0);
  EXPECT_NEAR(neg_log_lr_vertex(p4.g, p4.stats, split), 0.0, kEps);
  auto together = IncomingPartition::AllNonBackbone(p4.g, 1);
  EXPECT_NEAR(neg_log_lr_vertex(p4.g, p4.stats, together), 4 * std::log(2.0),
              kEps);

  Fixture star(star_graph(3));
  EXPECT_NEAR(neg_log_lr_vertex(star.g, star.stats, star_split()),
              2 * std::log(2.0), kEps);
}

TEST(NegLogLrVertex, AbsentCentroidIsInfinite) {
  Fixture star(star_graph(3));
  CentroidRow row = ml_centroids(star.g, star.stats,
                                 IncomingPartition::AllNonBackbone(star.g, 0));
  EXPECT_TRUE(std::isinf(
      neg_log_lr_vertex_at(star.g, star.stats, star_split(), row)));
}

TEST(MlCentroids, Examples) {
  Fixture star(star_graph(3));
  CentroidRow row = ml_centroids(star.g, star.stats, star_split());
  ASSERT_TRUE(row.has_non_backbone);
  EXPECT_NEAR(row.non_backbone[0], 0.5, kEps);
  EXPECT_NEAR(row.non_backbone[1], 0.25, kEps);
  EXPECT_NEAR(row.non_backbone[2], 0.25, kEps);

  Fixture p4(path_graph(4));
  std::vector<ArcId> from0{p4.g.find_arc(0, 1)};
  row = ml_centroids(p4.g, p4.stats,
                     IncomingPartition::FromArcs(p4.g, 1, from0));
  ASSERT_TRUE(row.has_backbone);
  EXPECT_EQ(row.backbone, (std::vector<double>{0.0, 1.0}));

  row = ml_centroids(p4.g, p4.stats, IncomingPartition::AllNonBackbone(p4.g, 1));
  EXPECT_FALSE(row.has_backbone);
  EXPECT_TRUE(row.backbone.empty());
}

TEST(VertexBenefit, Examples) {
  Fixture star(star_graph(3));
  auto p = fit_independent(star.g, star.stats);
  auto part = star_split();
  EXPECT_NEAR(vertex_benefit(star.g, star.stats, part,
                             ml_centroids(star.g, star.stats, part), p),
              4 * std::log(1.5) + 2 * std::log(0.75), kEps);

  auto leaf = IncomingPartition::AllNonBackbone(star.g, 2);
  EXPECT_EQ(vertex_benefit(star.g, star.stats, leaf,
                           ml_centroids(star.g, star.stats, leaf), p),
            0.0);

  Fixture p4(path_graph(4));
  p = fit_independent(p4.g, p4.stats);
  std::vector<ArcId> from0{p4.g.find_arc(0, 1)};
  auto split = IncomingPartition::FromArcs(p4.g, 1, from0);
  EXPECT_NEAR(vertex_benefit(p4.g, p4.stats, split,
                             ml_centroids(p4.g, p4.stats, split), p),
              2 * std::log(7.0 / 4) + 2 * std::log(7.0 / 3), kEps);
}

TEST(NegLogLrVertexset, Examples) {
  Fixture p4(path_graph(4));
  EXPECT_EQ(neg_log_lr_vertexset(p4.g, p4.stats, Backbone{}), 0.0);
  Backbone b{{1, 2}, {*p4.g.find_edge(1, 2)}};
  EXPECT_NEAR(neg_log_lr_vertexset(p4.g, p4.stats, b),
              loglik_markovian(p4.g, p4.stats) -
                  loglik_bimodal(p4.g, p4.stats, b),
              kEps);
}

TEST(NegLogLrVertexset, EqualsLikelihoodGapOnRandomBackbones) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Fixture f(testing::random_connected(8, 0.35, 100 + trial));
    Backbone b;
    for (VertexId v = 0; v < 8; ++v) {
      if (rng() % 2) b.vertices.push_back(v);
    }
    for (EdgeId e : induced_edges(f.g, b.vertices)) {
      if (rng() % 2) b.edges.push_back(e);
    }
    const double gap =
        loglik_markovian(f.g, f.stats) - loglik_bimodal(f.g, f.stats, b);
    const double value = neg_log_lr_vertexset(f.g, f.stats, b);
    EXPECT_NEAR(value, gap, 1e-9);
    EXPECT_GE(value, -1e-9);
  }
}

TEST(NegLogLrVertexset, RejectsInconsistentArcs) {
  Fixture p4(path_graph(4));
  VertexPartitions parts{{1, {0, 1}}, {2, {0, 0}}};
  EXPECT_THROW(neg_log_lr_vertexset(p4.g, p4.stats, parts,
                                    ml_centroids(p4.g, p4.stats, parts)),
               std::domain_error);
  VertexPartitions outside{{1, {1, 0}}};
  EXPECT_THROW(neg_log_lr_vertexset(p4.g, p4.stats, outside,
                                    ml_centroids(p4.g, p4.stats, outside)),
               std::domain_error);
}

TEST(ParamCounts, Examples) {
  Graph p4 = path_graph(4);
  auto none = param_counts(p4, std::vector<VertexId>{});
  EXPECT_EQ(none.markovian, 10);
  EXPECT_EQ(none.bimodal, 10);
  auto mid = param_counts(p4, std::vector<VertexId>{1, 2});
  EXPECT_EQ(mid.bimodal, 10);
  auto star = param_counts(star_graph(3), std::vector<VertexId>{0});
  EXPECT_EQ(star.markovian, 12);
  EXPECT_EQ(star.bimodal, 9);
}

TEST(ModelReport, EmptyAndStar) {
  Fixture star(star_graph(3));
  ModelReport empty = model_report(star.g, star.stats, Backbone{});
  EXPECT_EQ(empty.accuracy_ratio, 1.0);
  EXPECT_EQ(empty.reduction_ratio, 0.0);
  EXPECT_EQ(empty.edge_density, 0.0);

  ModelReport r = model_report(star.g, star.stats, Backbone{{0}, {}});
  EXPECT_EQ(r.param_em, 12);
  EXPECT_EQ(r.param_bm, 9);
  EXPECT_NEAR(r.reduction_ratio, 0.25, kEps);
  EXPECT_EQ(r.k, 1u);
  EXPECT_NEAR(r.accuracy_ratio, r.loglik_markovian / r.loglik_bimodal, kEps);
  EXPECT_LE(r.loglik_bimodal, r.loglik_markovian + kEps);
}

}  // namespace
}  // namespace backbone
