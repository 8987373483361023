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

// Generative path models over the canonical path set and their fits.
//
//  * edge independent: each arc leaving u has probability p(e) = N_e / M_u.
//  * edge Markovian: p(e | e') = N_{e'e} / M_{e'}, plus a first-arc law.
//  * bimodal Markovian: at a backbone vertex u the incoming arcs are split
//    into a backbone and a non-backbone class, and the outgoing law only
//    depends on the class of the arc the path arrived on.
//
// All logarithms are natural; 0 * log 0 is taken as 0.

#ifndef BACKBONE_LIKELIHOOD_H_
#define BACKBONE_LIKELIHOOD_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "backbone/graph.h"
#include "backbone/path_stats.h"

namespace backbone {

// Two-way split of the incoming arcs of one vertex. `backbone[i]` refers
// to the arc neighbors(vertex)[i] -> vertex.
struct IncomingPartition {
  VertexId vertex = -1;
  std::vector<char> backbone;

  // All incoming arcs in the non-backbone class.
  static IncomingPartition AllNonBackbone(const Graph& g, VertexId u);
  // Throws std::domain_error if an arc does not end at u.
  static IncomingPartition FromArcs(const Graph& g, VertexId u,
                                    std::span<const ArcId> backbone_arcs);

  bool operator==(const IncomingPartition&) const = default;
};

// Partitions for a set of backbone vertices, sorted by vertex.
using VertexPartitions = std::vector<IncomingPartition>;

// A connected vertex set plus the undirected edges among them that are
// backbone edges. Both arcs of a listed edge are backbone arcs; every other
// arc is not.
struct Backbone {
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending

  bool operator==(const Backbone&) const = default;
};

// Incoming partitions induced by the backbone's edge set.
VertexPartitions partitions_of(const Graph& g, const Backbone& b);

// The two class-conditional distributions over the outgoing arcs of one
// vertex (indexed like neighbors(vertex)). A class with no traffic has no
// distribution.
struct CentroidRow {
  VertexId vertex = -1;
  bool has_backbone = false;
  bool has_non_backbone = false;
  std::vector<double> backbone;
  std::vector<double> non_backbone;
};

// Rows parallel to a VertexPartitions.
using CentroidTable = std::vector<CentroidRow>;

// p(e) = N_e / M_tail(e); 0 when the tail carries no traffic.
std::vector<double> fit_independent(const Graph& g, const PathStats& stats);

struct MarkovianFit {
  // N'_e over the N' total of its tail; absent when that total is 0.
  std::vector<std::optional<double>> first_arc;
  // N_{e'e} / M_{e'}, parallel to stats.segments.
  std::vector<double> conditional;
};

MarkovianFit fit_markovian(const Graph& g, const PathStats& stats);

// p(out | in); absent when M_in is 0.
std::optional<double> conditional_probability(const Graph& g,
                                              const PathStats& stats,
                                              ArcId in, ArcId out);

// Sum over arcs of N'_e log p0(e); shared by the Markovian and bimodal
// likelihoods.
double first_arc_loglik(const Graph& g, const PathStats& stats);

double loglik_independent(const Graph& g, const PathStats& stats);
double loglik_markovian(const Graph& g, const PathStats& stats);

// Bimodal log-likelihood at the given centroids. Vertices without a
// partition keep their Markovian transitions. Throws std::domain_error on a
// malformed partition list or mismatched centroids.
double loglik_bimodal(const Graph& g, const PathStats& stats,
                      const VertexPartitions& parts,
                      const CentroidTable& centroids);
// Same, at the maximum-likelihood centroids.
double loglik_bimodal(const Graph& g, const PathStats& stats,
                      const VertexPartitions& parts);
double loglik_bimodal(const Graph& g, const PathStats& stats,
                      const Backbone& b);

CentroidRow ml_centroids(const Graph& g, const PathStats& stats,
                         const IncomingPartition& part);
CentroidTable ml_centroids(const Graph& g, const PathStats& stats,
                           const VertexPartitions& parts);

// -log LR(u) at the maximum-likelihood centroids of `part`: the
// M-weighted KL divergence of every incoming arc's transition law from its
// class centroid.
double neg_log_lr_vertex(const Graph& g, const PathStats& stats,
                         const IncomingPartition& part);
// Same objective at arbitrary centroids. +infinity when a class with
// traffic has no centroid or the centroid misses part of the support.
double neg_log_lr_vertex_at(const Graph& g, const PathStats& stats,
                            const IncomingPartition& part,
                            const CentroidRow& centroids);

// M_in * KL(p(.|in) || centroid) for one incoming arc of u; 0 when the arc
// carries no through traffic. `centroid` may be empty (absent) in which
// case any traffic yields +infinity.
double transition_divergence(const Graph& g, const PathStats& stats,
                             ArcId in, std::span<const double> centroid);

// Log-likelihood gain at u of the bimodal law over the edge independent
// law (first arcs excluded). `p_independent` comes from fit_independent.
double vertex_benefit(const Graph& g, const PathStats& stats,
                      const IncomingPartition& part,
                      const CentroidRow& centroids,
                      std::span<const double> p_independent);

// -log LR(V_B) grouped by undirected edges: arcs entering V_B from outside,
// then each edge inside V_B under its own class. Throws std::domain_error
// when an arc from outside V_B is marked backbone or the two arcs of an
// inner edge disagree.
double neg_log_lr_vertexset(const Graph& g, const PathStats& stats,
                            const VertexPartitions& parts,
                            const CentroidTable& centroids);
double neg_log_lr_vertexset(const Graph& g, const PathStats& stats,
                            const Backbone& b);

struct ParamCounts {
  std::int64_t markovian = 0;  // sum over v of deg(v)^2
  std::int64_t bimodal = 0;    // deg^2 off the backbone, 2 deg on it
};

ParamCounts param_counts(const Graph& g,
                         std::span<const VertexId> backbone_vertices);

struct ModelReport {
  double loglik_independent = 0.0;
  double loglik_markovian = 0.0;
  double loglik_bimodal = 0.0;
  std::int64_t param_em = 0;
  std::int64_t param_bm = 0;
  double reduction_ratio = 0.0;
  // log L_M / log L_B; 1 when either is 0.
  double accuracy_ratio = 1.0;
  std::size_t k = 0;
  std::vector<VertexId> backbone_vertices;
  std::vector<EdgeId> backbone_edges;
  // backbone edges per backbone vertex; 0 for an empty backbone.
  double edge_density = 0.0;
};

ModelReport model_report(const Graph& g, const PathStats& stats,
                         const Backbone& b, const CentroidTable& centroids);
ModelReport model_report(const Graph& g, const PathStats& stats,
                         const Backbone& b);

}  // namespace backbone

#endif  // BACKBONE_LIKELIHOOD_H_
