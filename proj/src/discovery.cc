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

#include "backbone/discovery.h"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

#include "backbone/subgraph_opt.h"

namespace backbone {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double consistent_benefit(const Graph& g, const PathStats& stats,
                          const VertexPartitions& parts,
                          const CentroidTable& centroids,
                          std::span<const double> p_independent) {
  double total = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    total += vertex_benefit(g, stats, parts[i], centroids[i], p_independent);
  }
  return total;
}

DiscoveryResult finish(const Graph& g, const PathStats& stats,
                       const SetPartitionResult& part,
                       std::span<const double> p_independent) {
  DiscoveryResult result;
  result.backbone = part.backbone;
  result.report = model_report(g, stats, part.backbone, part.centroids);
  result.w = consistent_benefit(g, stats, part.partitions, part.centroids,
                                p_independent);
  result.objectives = part.trace.objectives;
  return result;
}

std::size_t largest_component_size(const Graph& g) {
  std::size_t best = 0;
  for (const auto& c : connected_components(g)) best = std::max(best, c.size());
  return best;
}

struct McgStage {
  std::vector<double> weights;
  std::vector<double> p_independent;
  SetPartitionResult partition;
};

McgStage run_mcg_stage(const Graph& g, const PathStats& stats, std::size_t k,
                       std::uint64_t seed, int restarts) {
  McgStage stage;
  stage.weights = vertex_benefits(g, stats, seed, restarts);
  stage.p_independent = fit_independent(g, stats);
  auto vertices = mcg_heuristic(g, stage.weights, k);
  PartitionOptions options;
  options.restarts = restarts;
  stage.partition = gbi_kl_partition(g, stats, vertices, seed, options);
  return stage;
}

std::mt19937_64 refine_rng(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), 0x17e2u};
  return std::mt19937_64(seq);
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kVb:
      return "vb";
    case Method::kMcg:
      return "mcg";
    case Method::kIter:
      return "iter";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "vb") return Method::kVb;
  if (name == "mcg") return Method::kMcg;
  if (name == "iter") return Method::kIter;
  return std::nullopt;
}

void validate(const Graph& g, const DiscoveryConfig& config) {
  if (config.k == 0) throw std::invalid_argument("K must be positive");
  if (config.restarts < 1) {
    throw std::invalid_argument("restarts must be positive");
  }
  const std::size_t largest = largest_component_size(g);
  if (config.k > largest) {
    throw InfeasibleError("K = " + std::to_string(config.k) +
                          " exceeds the largest connected component (" +
                          std::to_string(largest) + " vertices)");
  }
}

std::vector<double> vertex_benefits(const Graph& g, const PathStats& stats,
                                    std::uint64_t seed, int restarts) {
  const auto p_independent = fit_independent(g, stats);
  PartitionOptions options;
  options.restarts = restarts;
  std::vector<double> weights(g.num_vertices(), 0.0);
  for (VertexId u = 0; u < static_cast<VertexId>(g.num_vertices()); ++u) {
    auto best = bi_kl_partition(g, stats, u, seed, options);
    weights[u] = vertex_benefit(g, stats, best.partition, best.centroids,
                                p_independent);
  }
  return weights;
}

double backbone_benefit(const Graph& g, const PathStats& stats,
                        const Backbone& b) {
  const auto parts = partitions_of(g, b);
  return consistent_benefit(g, stats, parts, ml_centroids(g, stats, parts),
                            fit_independent(g, stats));
}

DiscoveryResult discover_vb(const Graph& g, const PathStats& stats,
                            std::size_t k) {
  validate(g, {Method::kVb, k});
  const auto score = vertex_betweenness(g);

  std::vector<VertexId> pool;
  {
    auto components = connected_components(g);
    std::size_t best = 0;
    for (std::size_t i = 1; i < components.size(); ++i) {
      if (components[i].size() > components[best].size()) best = i;
    }
    pool = std::move(components[best]);
  }
  auto by_score = [&](VertexId a, VertexId b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return a < b;
  };
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k),
                    pool.end(), by_score);
  pool.resize(k);

  const SteinerTree tree = steiner_approx(g, pool);
  std::vector<VertexId> current = tree.vertices;
  std::vector<VertexId> order = current;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (score[a] != score[b]) return score[a] < score[b];
    return a < b;
  });
  std::deque<VertexId> queue(order.begin(), order.end());
  std::vector<VertexId> trial;
  while (current.size() > k) {
    const VertexId v = queue.front();
    queue.pop_front();
    trial.clear();
    for (VertexId x : current) {
      if (x != v) trial.push_back(x);
    }
    if (is_connected(g, trial)) {
      current.swap(trial);
    } else {
      queue.push_back(v);
    }
  }

  Backbone b{current, induced_edges(g, current)};
  const auto parts = partitions_of(g, b);
  const auto centroids = ml_centroids(g, stats, parts);
  DiscoveryResult result;
  result.backbone = b;
  result.report = model_report(g, stats, b, centroids);
  result.w = consistent_benefit(g, stats, parts, centroids,
                                fit_independent(g, stats));
  result.objectives.push_back(neg_log_lr_vertexset(g, stats, parts, centroids));
  return result;
}

DiscoveryResult discover_mcg(const Graph& g, const PathStats& stats,
                             std::size_t k, std::uint64_t seed, int restarts) {
  validate(g, {Method::kMcg, k, seed, restarts});
  McgStage stage = run_mcg_stage(g, stats, k, seed, restarts);
  return finish(g, stats, stage.partition, stage.p_independent);
}

DiscoveryResult discover_iter(const Graph& g, const PathStats& stats,
                              std::size_t k, std::uint64_t seed, int restarts,
                              std::size_t max_refine_iters, double tolerance) {
  validate(g, {Method::kIter, k, seed, restarts});
  const std::size_t n = g.num_vertices();
  if (max_refine_iters == 0) max_refine_iters = 10 * n;

  McgStage stage = run_mcg_stage(g, stats, k, seed, restarts);
  const auto& F = stage.weights;
  const auto& p_ind = stage.p_independent;

  SetPartitionResult best = stage.partition;
  const double w_start = consistent_benefit(g, stats, best.partitions,
                                            best.centroids, p_ind);
  double w_best = w_start;
  const double h_start = set_weight(F, best.backbone.vertices);
  std::vector<RefineStep> trace{{h_start, w_start, w_best}};

  const auto entropies = row_entropies(g, stats);
  PartitionOptions warm;
  warm.restarts = 1;
  warm.tolerance = tolerance;

  // F' depends only on a vertex's partition, which mostly survives a step.
  std::vector<std::optional<std::pair<IncomingPartition, double>>> memo(n);
  auto set_benefit = [&](const SetPartitionResult& part) {
    double total = 0.0;
    for (std::size_t i = 0; i < part.partitions.size(); ++i) {
      const IncomingPartition& p = part.partitions[i];
      auto& slot = memo[p.vertex];
      if (!slot || slot->first != p) {
        slot.emplace(p, vertex_benefit(g, stats, p, part.centroids[i], p_ind));
      }
      total += slot->second;
    }
    return total;
  };

  for (int r = 0; r < restarts; ++r) {
    auto rng = refine_rng(seed, r);
    std::vector<char> removed(n, 0);
    std::vector<char> inside(n, 0);
    std::vector<VertexId> current = stage.partition.backbone.vertices;
    std::vector<EdgeId> edges = stage.partition.backbone.edges;
    for (VertexId v : current) inside[v] = 1;
    std::size_t remaining = n;
    double w_high = h_start;
    double w_local = w_start;

    std::vector<VertexId> order, rest;
    for (std::size_t step = 0; step < max_refine_iters; ++step) {
      if (remaining <= k || !(w_high > w_local + tolerance)) break;

      order = current;
      std::shuffle(order.begin(), order.end(), rng);
      std::optional<VertexId> drop;
      for (VertexId v : order) {
        rest.clear();
        for (VertexId x : current) {
          if (x != v) rest.push_back(x);
        }
        if (rest.empty() || is_connected(g, rest)) {
          drop = v;
          break;
        }
      }
      if (!drop) break;
      removed[*drop] = 1;
      inside[*drop] = 0;
      --remaining;
      current.swap(rest);

      std::optional<VertexId> add;
      auto consider = [&](VertexId w) {
        if (removed[w] || inside[w]) return;
        if (!add || F[w] > F[*add] || (F[w] == F[*add] && w < *add)) add = w;
      };
      if (current.empty()) {
        for (VertexId w = 0; w < static_cast<VertexId>(n); ++w) consider(w);
      } else {
        for (VertexId x : current) {
          for (VertexId w : g.neighbors(x)) consider(w);
        }
      }
      if (!add) break;
      inside[*add] = 1;
      current.insert(std::upper_bound(current.begin(), current.end(), *add),
                     *add);
      w_high += F[*add] - F[*drop];

      std::vector<EdgeId> kept;
      for (EdgeId e : edges) {
        auto [a, b] = g.edge(e);
        if (inside[a] && inside[b]) kept.push_back(e);
      }
      SetPartitionResult part =
          gbi_kl_partition(g, stats, current, seed, warm,
                           std::span<const EdgeId>(kept), entropies);
      edges = part.backbone.edges;
      const double w_low = set_benefit(part);
      w_local = std::max(w_local, w_low);
      if (w_low > w_best) {
        w_best = w_low;
        best = std::move(part);
      }
      trace.push_back({w_high, w_low, w_best});
    }
  }

  DiscoveryResult result = finish(g, stats, best, p_ind);
  result.refine_trace = std::move(trace);
  return result;
}

DiscoveryResult discover(const Graph& g, const PathStats& stats,
                         const DiscoveryConfig& config) {
  validate(g, config);
  const auto start = Clock::now();
  DiscoveryResult result;
  switch (config.method) {
    case Method::kVb:
      result = discover_vb(g, stats, config.k);
      break;
    case Method::kMcg:
      result = discover_mcg(g, stats, config.k, config.seed, config.restarts);
      break;
    case Method::kIter:
      result = discover_iter(g, stats, config.k, config.seed, config.restarts,
                             config.max_refine_iters, config.tolerance);
      break;
  }
  result.timings.discover_seconds = seconds_since(start);
  return result;
}

DiscoveryResult discover(const Graph& g, const DiscoveryConfig& config) {
  validate(g, config);
  const auto start = Clock::now();
  const PathStats stats = canonical_paths_stats(g);
  const double preprocess = seconds_since(start);
  DiscoveryResult result = discover(g, stats, config);
  result.timings.preprocess_seconds = preprocess;
  return result;
}

}  // namespace backbone
