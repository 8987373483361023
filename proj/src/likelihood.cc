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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace backbone {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Segments of u whose incoming arc is `in`.
std::span<const Segment> incoming_row(const PathStats& stats, VertexId u,
                                      ArcId in) {
  auto group = stats.segments_at(u);
  auto lo = std::lower_bound(
      group.begin(), group.end(), in,
      [](const Segment& s, ArcId value) { return s.in < value; });
  auto hi = std::upper_bound(
      lo, group.end(), in,
      [](ArcId value, const Segment& s) { return value < s.in; });
  return {lo, hi};
}

// Index of the incoming arc `in` among the incoming arcs of head(in).
std::size_t in_index(const Graph& g, ArcId in) {
  return g.out_index(g.reverse(in));
}

void check_partition(const Graph& g, const IncomingPartition& part) {
  if (part.vertex < 0 || part.vertex >= static_cast<VertexId>(g.num_vertices())) {
    throw std::domain_error("partition vertex " + std::to_string(part.vertex) +
                            " out of range");
  }
  if (part.backbone.size() != g.degree(part.vertex)) {
    throw std::domain_error("partition of vertex " +
                            std::to_string(part.vertex) +
                            " does not cover its incoming arcs");
  }
}

void check_partitions(const Graph& g, const VertexPartitions& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    check_partition(g, parts[i]);
    if (i > 0 && parts[i - 1].vertex >= parts[i].vertex) {
      throw std::domain_error("partitions must be sorted by vertex, unique");
    }
  }
}

void check_centroids(const VertexPartitions& parts,
                     const CentroidTable& centroids) {
  if (centroids.size() != parts.size()) {
    throw std::domain_error("centroid table does not match partitions");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (centroids[i].vertex != parts[i].vertex) {
      throw std::domain_error("centroid table does not match partitions");
    }
  }
}

// Per-outgoing-arc class counts N_{B e} and N_{~B e} at one vertex.
struct ClassCounts {
  std::vector<std::int64_t> backbone;
  std::vector<std::int64_t> non_backbone;
};

ClassCounts class_counts(const Graph& g, const PathStats& stats,
                         const IncomingPartition& part) {
  const std::size_t d = g.degree(part.vertex);
  ClassCounts counts{std::vector<std::int64_t>(d, 0),
                     std::vector<std::int64_t>(d, 0)};
  for (const Segment& seg : stats.segments_at(part.vertex)) {
    const std::size_t j = g.out_index(seg.out);
    if (part.backbone[in_index(g, seg.in)]) {
      counts.backbone[j] += seg.count;
    } else {
      counts.non_backbone[j] += seg.count;
    }
  }
  return counts;
}

// sum_j counts[j] * log(probs[j] / scale[j]), skipping zero counts.
double weighted_log(std::span<const std::int64_t> counts, bool present,
                    std::span<const double> probs) {
  double total = 0.0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    if (!present || probs[j] <= 0.0) return -kInf;
    total += static_cast<double>(counts[j]) * std::log(probs[j]);
  }
  return total;
}

double markov_transitions_loglik(const Graph& g, const PathStats& stats,
                                 VertexId u) {
  (void)g;
  double total = 0.0;
  for (const Segment& seg : stats.segments_at(u)) {
    const double n = static_cast<double>(seg.count);
    total += n * std::log(n / static_cast<double>(stats.m_arc[seg.in]));
  }
  return total;
}

double bimodal_transitions_loglik(const Graph& g, const PathStats& stats,
                                  const IncomingPartition& part,
                                  const CentroidRow& row) {
  ClassCounts counts = class_counts(g, stats, part);
  return weighted_log(counts.backbone, row.has_backbone, row.backbone) +
         weighted_log(counts.non_backbone, row.has_non_backbone,
                      row.non_backbone);
}

std::span<const double> class_centroid(const CentroidRow& row, bool backbone) {
  if (backbone) {
    return row.has_backbone ? std::span<const double>(row.backbone)
                            : std::span<const double>();
  }
  return row.has_non_backbone ? std::span<const double>(row.non_backbone)
                              : std::span<const double>();
}

}  // namespace

IncomingPartition IncomingPartition::AllNonBackbone(const Graph& g,
                                                    VertexId u) {
  return {u, std::vector<char>(g.degree(u), 0)};
}

IncomingPartition IncomingPartition::FromArcs(
    const Graph& g, VertexId u, std::span<const ArcId> backbone_arcs) {
  IncomingPartition part = AllNonBackbone(g, u);
  for (ArcId a : backbone_arcs) {
    if (a < 0 || a >= static_cast<ArcId>(g.num_arcs()) || g.head(a) != u) {
      throw std::domain_error("arc " + std::to_string(a) +
                              " is not an incoming arc of vertex " +
                              std::to_string(u));
    }
    part.backbone[in_index(g, a)] = 1;
  }
  return part;
}

VertexPartitions partitions_of(const Graph& g, const Backbone& b) {
  std::vector<char> on_backbone(g.num_edges(), 0);
  for (EdgeId e : b.edges) on_backbone[e] = 1;
  VertexPartitions parts;
  parts.reserve(b.vertices.size());
  for (VertexId u : b.vertices) {
    IncomingPartition part = IncomingPartition::AllNonBackbone(g, u);
    for (ArcId a = g.out_begin(u); a < g.out_end(u); ++a) {
      part.backbone[g.out_index(a)] = on_backbone[g.edge_of(a)];
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<double> fit_independent(const Graph& g, const PathStats& stats) {
  std::vector<double> p(g.num_arcs(), 0.0);
  for (ArcId a = 0; a < static_cast<ArcId>(g.num_arcs()); ++a) {
    const std::int64_t m = stats.m_vertex[g.tail(a)];
    if (m > 0) p[a] = static_cast<double>(stats.n_arc[a]) / static_cast<double>(m);
  }
  return p;
}

MarkovianFit fit_markovian(const Graph& g, const PathStats& stats) {
  MarkovianFit fit;
  fit.first_arc.resize(g.num_arcs());
  for (VertexId u = 0; u < static_cast<VertexId>(g.num_vertices()); ++u) {
    std::int64_t starts = 0;
    for (ArcId a = g.out_begin(u); a < g.out_end(u); ++a) starts += stats.n_start[a];
    if (starts == 0) continue;
    for (ArcId a = g.out_begin(u); a < g.out_end(u); ++a) {
      fit.first_arc[a] =
          static_cast<double>(stats.n_start[a]) / static_cast<double>(starts);
    }
  }
  fit.conditional.reserve(stats.segments.size());
  for (const Segment& seg : stats.segments) {
    fit.conditional.push_back(static_cast<double>(seg.count) /
                              static_cast<double>(stats.m_arc[seg.in]));
  }
  return fit;
}

std::optional<double> conditional_probability(const Graph& g,
                                              const PathStats& stats,
                                              ArcId in, ArcId out) {
  if (stats.m_arc[in] == 0) return std::nullopt;
  return static_cast<double>(segment_count(g, stats, in, out)) /
         static_cast<double>(stats.m_arc[in]);
}

double first_arc_loglik(const Graph& g, const PathStats& stats) {
  double total = 0.0;
  for (VertexId u = 0; u < static_cast<VertexId>(g.num_vertices()); ++u) {
    std::int64_t starts = 0;
    for (ArcId a = g.out_begin(u); a < g.out_end(u); ++a) starts += stats.n_start[a];
    for (ArcId a = g.out_begin(u); a < g.out_end(u); ++a) {
      if (stats.n_start[a] == 0) continue;
      const double n = static_cast<double>(stats.n_start[a]);
      total += n * std::log(n / static_cast<double>(starts));
    }
  }
  return total;
}

double loglik_independent(const Graph& g, const PathStats& stats) {
  double total = 0.0;
  for (ArcId a = 0; a < static_cast<ArcId>(g.num_arcs()); ++a) {
    if (stats.n_arc[a] == 0) continue;
    const double n = static_cast<double>(stats.n_arc[a]);
    total += n * std::log(n / static_cast<double>(stats.m_vertex[g.tail(a)]));
  }
  return total;
}

double loglik_markovian(const Graph& g, const PathStats& stats) {
  double total = first_arc_loglik(g, stats);
  for (VertexId u = 0; u < static_cast<VertexId>(g.num_vertices()); ++u) {
    total += markov_transitions_loglik(g, stats, u);
  }
  return total;
}

double loglik_bimodal(const Graph& g, const PathStats& stats,
                      const VertexPartitions& parts,
                      const CentroidTable& centroids) {
  check_partitions(g, parts);
  check_centroids(parts, centroids);
  double total = first_arc_loglik(g, stats);
  std::size_t next = 0;
  for (VertexId u = 0; u < static_cast<VertexId>(g.num_vertices()); ++u) {
    if (next < parts.size() && parts[next].vertex == u) {
      total += bimodal_transitions_loglik(g, stats, parts[next], centroids[next]);
      ++next;
    } else {
      total += markov_transitions_loglik(g, stats, u);
    }
  }
  return total;
}

double loglik_bimodal(const Graph& g, const PathStats& stats,
                      const VertexPartitions& parts) {
  return loglik_bimodal(g, stats, parts, ml_centroids(g, stats, parts));
}

double loglik_bimodal(const Graph& g, const PathStats& stats,
                      const Backbone& b) {
  return loglik_bimodal(g, stats, partitions_of(g, b));
}

CentroidRow ml_centroids(const Graph& g, const PathStats& stats,
                         const IncomingPartition& part) {
  check_partition(g, part);
  ClassCounts counts = class_counts(g, stats, part);
  CentroidRow row;
  row.vertex = part.vertex;
  auto normalize = [](const std::vector<std::int64_t>& c,
                      std::vector<double>& out) {
    std::int64_t total = 0;
    for (std::int64_t x : c) total += x;
    if (total == 0) return false;
    out.resize(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      out[j] = static_cast<double>(c[j]) / static_cast<double>(total);
    }
    return true;
  };
  row.has_backbone = normalize(counts.backbone, row.backbone);
  row.has_non_backbone = normalize(counts.non_backbone, row.non_backbone);
  return row;
}

CentroidTable ml_centroids(const Graph& g, const PathStats& stats,
                           const VertexPartitions& parts) {
  CentroidTable table;
  table.reserve(parts.size());
  for (const IncomingPartition& part : parts) {
    table.push_back(ml_centroids(g, stats, part));
  }
  return table;
}

double transition_divergence(const Graph& g, const PathStats& stats,
                             ArcId in, std::span<const double> centroid) {
  const std::int64_t m = stats.m_arc[in];
  if (m == 0) return 0.0;
  const double md = static_cast<double>(m);
  double total = 0.0;
  for (const Segment& seg : incoming_row(stats, g.head(in), in)) {
    if (centroid.empty()) return kInf;
    const double c = centroid[g.out_index(seg.out)];
    if (c <= 0.0) return kInf;
    const double n = static_cast<double>(seg.count);
    total += n * std::log(n / (md * c));
  }
  return total;
}

double neg_log_lr_vertex_at(const Graph& g, const PathStats& stats,
                            const IncomingPartition& part,
                            const CentroidRow& centroids) {
  check_partition(g, part);
  double total = 0.0;
  for (std::size_t i = 0; i < part.backbone.size(); ++i) {
    total += transition_divergence(
        g, stats, g.in_arc(part.vertex, i),
        class_centroid(centroids, part.backbone[i] != 0));
  }
  return total;
}

double neg_log_lr_vertex(const Graph& g, const PathStats& stats,
                         const IncomingPartition& part) {
  return neg_log_lr_vertex_at(g, stats, part, ml_centroids(g, stats, part));
}

double vertex_benefit(const Graph& g, const PathStats& stats,
                      const IncomingPartition& part,
                      const CentroidRow& centroids,
                      std::span<const double> p_independent) {
  check_partition(g, part);
  ClassCounts counts = class_counts(g, stats, part);
  const VertexId u = part.vertex;
  double total = 0.0;
  auto add = [&](const std::vector<std::int64_t>& c, bool present,
                 const std::vector<double>& probs) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      if (!present || probs[j] <= 0.0) {
        total = -kInf;
        return;
      }
      const double p = p_independent[g.out_begin(u) + static_cast<ArcId>(j)];
      total += static_cast<double>(c[j]) * std::log(probs[j] / p);
    }
  };
  add(counts.backbone, centroids.has_backbone, centroids.backbone);
  add(counts.non_backbone, centroids.has_non_backbone, centroids.non_backbone);
  return total;
}

double neg_log_lr_vertexset(const Graph& g, const PathStats& stats,
                            const VertexPartitions& parts,
                            const CentroidTable& centroids) {
  check_partitions(g, parts);
  check_centroids(parts, centroids);
  std::vector<std::int32_t> slot(g.num_vertices(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    slot[parts[i].vertex] = static_cast<std::int32_t>(i);
  }

  double boundary = 0.0;   // edges with one endpoint in V_B
  double as_backbone = 0.0;
  double as_other = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const VertexId u = parts[i].vertex;
    for (std::size_t k = 0; k < g.degree(u); ++k) {
      const VertexId w = g.neighbors(u)[k];
      const ArcId into_u = g.in_arc(u, k);
      const bool flag = parts[i].backbone[k] != 0;
      if (slot[w] < 0) {
        if (flag) {
          throw std::domain_error("arc from outside the vertex set marked backbone");
        }
        boundary += transition_divergence(g, stats, into_u,
                                          class_centroid(centroids[i], false));
        continue;
      }
      if (w < u) continue;  // each inner edge once, from its smaller end
      const auto& other = parts[slot[w]];
      const ArcId into_w = g.reverse(into_u);
      const bool other_flag = other.backbone[in_index(g, into_w)] != 0;
      if (flag != other_flag) {
        throw std::domain_error("edge (" + std::to_string(u) + "," +
                                std::to_string(w) +
                                ") has inconsistent arc classes");
      }
      const double cost =
          transition_divergence(g, stats, into_u,
                                class_centroid(centroids[i], flag)) +
          transition_divergence(g, stats, into_w,
                                class_centroid(centroids[slot[w]], flag));
      (flag ? as_backbone : as_other) += cost;
    }
  }
  return boundary + as_backbone + as_other;
}

double neg_log_lr_vertexset(const Graph& g, const PathStats& stats,
                            const Backbone& b) {
  VertexPartitions parts = partitions_of(g, b);
  return neg_log_lr_vertexset(g, stats, parts, ml_centroids(g, stats, parts));
}

ParamCounts param_counts(const Graph& g,
                         std::span<const VertexId> backbone_vertices) {
  std::vector<char> on(g.num_vertices(), 0);
  for (VertexId v : backbone_vertices) on[v] = 1;
  ParamCounts counts;
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    counts.markovian += d * d;
    counts.bimodal += on[v] ? 2 * d : d * d;
  }
  return counts;
}

ModelReport model_report(const Graph& g, const PathStats& stats,
                         const Backbone& b, const CentroidTable& centroids) {
  VertexPartitions parts = partitions_of(g, b);
  ModelReport report;
  report.loglik_independent = loglik_independent(g, stats);
  report.loglik_markovian = loglik_markovian(g, stats);
  report.loglik_bimodal = loglik_bimodal(g, stats, parts, centroids);
  ParamCounts params = param_counts(g, b.vertices);
  report.param_em = params.markovian;
  report.param_bm = params.bimodal;
  report.reduction_ratio =
      params.markovian == 0
          ? 0.0
          : static_cast<double>(params.markovian - params.bimodal) /
                static_cast<double>(params.markovian);
  report.accuracy_ratio =
      (report.loglik_markovian == 0.0 || report.loglik_bimodal == 0.0)
          ? 1.0
          : report.loglik_markovian / report.loglik_bimodal;
  report.k = b.vertices.size();
  report.backbone_vertices = b.vertices;
  report.backbone_edges = b.edges;
  report.edge_density =
      b.vertices.empty() ? 0.0
                         : static_cast<double>(b.edges.size()) /
                               static_cast<double>(b.vertices.size());
  return report;
}

ModelReport model_report(const Graph& g, const PathStats& stats,
                         const Backbone& b) {
  return model_report(g, stats, b, ml_centroids(g, stats, partitions_of(g, b)));
}

}  // namespace backbone
