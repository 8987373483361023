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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

namespace backbone {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double row_entropy(std::span<const Segment> row, std::int64_t mass) {
  double total = 0.0;
  for (const Segment& seg : row) {
    total += static_cast<double>(seg.count) *
             std::log(static_cast<double>(seg.count) /
                      static_cast<double>(mass));
  }
  return total;
}

// Continuation row of one incoming arc: its segments, which share the
// tail's first outgoing arc as `first_out`.
struct ArcLaw {
  std::int64_t mass = 0;  // M of the incoming arc
  double self = 0.0;      // sum of n log(n / M) over the row
  ArcId first_out = 0;
  std::span<const Segment> row;

  std::size_t out_index(const Segment& seg) const {
    return static_cast<std::size_t>(seg.out - first_out);
  }
};

// Incoming rows of one vertex, plus the transition counts when every
// incoming arc sits in one class: N - N' of each outgoing arc.
struct VertexRows {
  std::vector<ArcLaw> laws;
  std::vector<std::int64_t> through;
};

VertexRows vertex_rows(const Graph& g, const PathStats& stats, VertexId u,
                       std::span<const double> entropies) {
  VertexRows rows;
  const std::size_t d = g.degree(u);
  const ArcId first_out = g.out_begin(u);
  const auto segs = stats.segments_at(u);
  auto by_in = [](const Segment& seg, ArcId in) { return seg.in < in; };
  rows.laws.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    ArcLaw& law = rows.laws[i];
    const ArcId in = g.in_arc(u, i);
    const auto lo = std::lower_bound(segs.begin(), segs.end(), in, by_in);
    auto hi = lo;
    while (hi != segs.end() && hi->in == in) ++hi;
    law.row = std::span<const Segment>(lo, hi);
    law.mass = stats.m_arc[in];
    law.first_out = first_out;
    law.self = entropies.empty() ? row_entropy(law.row, law.mass)
                                 : entropies[in];
  }
  rows.through.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    const ArcId out = first_out + static_cast<ArcId>(j);
    rows.through[j] = stats.n_arc[out] - stats.n_start[out];
  }
  return rows;
}

// Distribution over outgoing arcs; empty when the class has no traffic.
using Law = std::vector<double>;

void log_into(const Law& law, Law& out) {
  out.resize(law.size());
  for (std::size_t j = 0; j < law.size(); ++j) {
    out[j] = law[j] > 0.0 ? std::log(law[j]) : -kInf;
  }
}

// `log_centroid` holds the logs of a centroid, empty when it is absent.
double divergence(const ArcLaw& law, const Law& log_centroid) {
  if (law.mass == 0) return 0.0;
  if (log_centroid.empty()) return kInf;
  double cross = 0.0;
  for (const Segment& seg : law.row) {
    const double lc = log_centroid[law.out_index(seg)];
    if (lc == -kInf) return kInf;
    cross += static_cast<double>(seg.count) * lc;
  }
  return law.self - cross;
}

// Incoming arcs of one vertex with their class (1 = backbone), the
// per-class transition counts and the two class centroids.
struct VertexState {
  VertexId vertex = -1;
  std::span<const ArcLaw> laws;
  std::vector<char> cls;
  std::array<std::vector<std::int64_t>, 2> counts;
  std::array<std::int64_t, 2> total{0, 0};
  double self = 0.0;
  bool stale = true;
  std::array<Law, 2> centroid;
  std::array<Law, 2> log_centroid;

  VertexState(VertexId u, const VertexRows& rows)
      : vertex(u), laws(rows.laws), cls(laws.size(), 0) {
    counts[0] = rows.through;
    counts[1].assign(laws.size(), 0);
    for (const ArcLaw& law : laws) {
      total[0] += law.mass;
      self += law.self;
    }
  }

  bool active(std::size_t i) const { return laws[i].mass > 0; }

  void set_class(std::size_t i, char c) {
    if (cls[i] == c) return;
    for (const Segment& seg : laws[i].row) {
      const std::size_t j = laws[i].out_index(seg);
      counts[cls[i]][j] -= seg.count;
      counts[c][j] += seg.count;
    }
    total[cls[i]] -= laws[i].mass;
    total[c] += laws[i].mass;
    cls[i] = c;
    stale = true;
  }

  void refit() {
    if (!stale) return;
    stale = false;
    const std::size_t d = laws.size();
    for (int c = 0; c < 2; ++c) {
      centroid[c].clear();
      log_centroid[c].clear();
      if (total[c] == 0) continue;
      centroid[c].resize(d);
      for (std::size_t j = 0; j < d; ++j) {
        centroid[c][j] =
            static_cast<double>(counts[c][j]) / static_cast<double>(total[c]);
      }
      log_into(centroid[c], log_centroid[c]);
    }
  }

  // Valid right after refit(): at the ML centroids the summed divergence
  // collapses to the per-class count totals.
  double objective() const {
    double cross = 0.0;
    for (int c = 0; c < 2; ++c) {
      for (std::size_t j = 0; j < counts[c].size(); ++j) {
        if (counts[c][j] > 0) {
          cross += static_cast<double>(counts[c][j]) * log_centroid[c][j];
        }
      }
    }
    return self - cross;
  }

  // Cost of arc i under class c during a sweep. An absent centroid is free:
  // the first arc to claim it becomes its provisional centroid.
  double trial(std::size_t i, int c) const {
    if (!active(i) || centroid[c].empty()) return 0.0;
    return divergence(laws[i], log_centroid[c]);
  }

  void claim(std::size_t i, int c) {
    if (!active(i) || !centroid[c].empty()) return;
    Law law(laws.size(), 0.0);
    for (const Segment& seg : laws[i].row) {
      law[laws[i].out_index(seg)] = static_cast<double>(seg.count) /
                                    static_cast<double>(laws[i].mass);
    }
    log_into(law, log_centroid[c]);
    centroid[c] = std::move(law);
    stale = true;
  }

  IncomingPartition partition() const { return {vertex, cls}; }

  CentroidRow row() const {
    CentroidRow r;
    r.vertex = vertex;
    r.has_non_backbone = !centroid[0].empty();
    r.has_backbone = !centroid[1].empty();
    r.non_backbone = centroid[0];
    r.backbone = centroid[1];
    return r;
  }
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One engine per (seed, restart, vertex); called once per vertex and
// restart, so it avoids the cost of a seed_seq.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return std::mt19937_64(splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b));
}

void check_options(const PartitionOptions& options) {
  if (options.restarts < 1) {
    throw std::domain_error("restarts must be at least 1");
  }
  if (options.max_iters < 0) {
    throw std::domain_error("max_iters must be non-negative");
  }
}

// Alternates `sweep` and a centroid refit until nothing moves, the
// objective stalls or the iteration budget runs out.
template <typename Sweep, typename Refit, typename Objective>
PartitionTrace run_kmeans(const PartitionOptions& options, Sweep sweep,
                          Refit refit, Objective objective) {
  PartitionTrace trace;
  refit();
  double current = objective();
  trace.objectives.push_back(current);
  for (int iter = 1; iter <= options.max_iters; ++iter) {
    const bool changed = sweep();
    refit();
    const double next = objective();
    trace.objectives.push_back(next);
    trace.iterations = iter;
    if (!changed || std::abs(next - current) <= options.tolerance) {
      trace.converged = true;
      break;
    }
    current = next;
  }
  if (options.max_iters == 0) trace.converged = true;
  return trace;
}

}  // namespace

VertexPartitionResult bi_kl_partition(const Graph& g, const PathStats& stats,
                                      VertexId u, std::uint64_t seed,
                                      const PartitionOptions& options) {
  if (u < 0 || u >= static_cast<VertexId>(g.num_vertices())) {
    throw std::domain_error("vertex " + std::to_string(u) + " out of range");
  }
  check_options(options);

  const VertexRows rows = vertex_rows(g, stats, u, {});
  VertexState base(u, rows);
  std::vector<std::size_t> points;
  for (std::size_t i = 0; i < base.laws.size(); ++i) {
    if (base.active(i)) points.push_back(i);
  }

  auto finish = [&](const VertexState& state, PartitionTrace trace) {
    VertexPartitionResult result;
    result.partition = state.partition();
    result.centroids = state.row();
    result.objective = trace.objectives.back();
    trace.seed = seed;
    result.trace = std::move(trace);
    return result;
  };

  if (points.size() < 2) {
    base.refit();
    PartitionTrace trace;
    trace.objectives.push_back(base.objective());
    trace.converged = true;
    return finish(base, std::move(trace));
  }

  std::optional<VertexPartitionResult> best;
  for (int r = 0; r < options.restarts; ++r) {
    VertexState state = base;
    auto rng = make_rng(seed, static_cast<std::uint64_t>(r),
                        static_cast<std::uint64_t>(u));
    std::bernoulli_distribution coin(0.5);
    for (;;) {
      std::size_t on = 0;
      for (std::size_t i : points) {
        state.set_class(i, coin(rng) ? 1 : 0);
        on += state.cls[i];
      }
      if (on > 0 && on < points.size()) break;
    }

    auto sweep = [&] {
      bool changed = false;
      for (std::size_t i : points) {
        const double to_backbone = state.trial(i, 1);
        const double to_other = state.trial(i, 0);
        const char c = to_backbone < to_other - options.tolerance ? 1 : 0;
        if (c != state.cls[i]) changed = true;
        state.set_class(i, c);
        state.claim(i, c);
      }
      return changed;
    };
    PartitionTrace trace = run_kmeans(
        options, sweep, [&] { state.refit(); },
        [&] { return state.objective(); });
    if (!best || trace.objectives.back() < best->objective) {
      best = finish(state, std::move(trace));
    }
  }
  return *std::move(best);
}

std::vector<double> row_entropies(const Graph& g, const PathStats& stats) {
  std::vector<double> out(g.num_arcs(), 0.0);
  for (VertexId u = 0; u < static_cast<VertexId>(g.num_vertices()); ++u) {
    for (const ArcLaw& law : vertex_rows(g, stats, u, {}).laws) {
      if (law.row.empty()) continue;
      out[law.row.front().in] = law.self;
    }
  }
  return out;
}

SetPartitionResult gbi_kl_partition(
    const Graph& g, const PathStats& stats, std::span<const VertexId> vertices,
    std::uint64_t seed, const PartitionOptions& options,
    std::optional<std::span<const EdgeId>> init,
    std::span<const double> row_entropies) {
  check_options(options);
  if (!row_entropies.empty() && row_entropies.size() != g.num_arcs()) {
    throw std::domain_error("one row entropy per arc required");
  }
  if (vertices.empty()) throw std::domain_error("empty vertex set");
  std::vector<VertexId> set(vertices.begin(), vertices.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (VertexId v : set) {
    if (v < 0 || v >= static_cast<VertexId>(g.num_vertices())) {
      throw std::domain_error("vertex " + std::to_string(v) + " out of range");
    }
  }

  std::vector<std::int32_t> slot(g.num_vertices(), -1);
  std::vector<VertexRows> rows;
  std::vector<VertexState> base;
  rows.reserve(set.size());
  base.reserve(set.size());
  for (std::size_t s = 0; s < set.size(); ++s) {
    slot[set[s]] = static_cast<std::int32_t>(s);
    rows.push_back(vertex_rows(g, stats, set[s], row_entropies));
    base.emplace_back(set[s], rows.back());
  }

  // Candidate edge (u, v), u < v: slot and incoming index at each end.
  struct Candidate {
    EdgeId edge;
    std::int32_t su, sv;
    std::size_t iu, iv;  // arc v->u at u, arc u->v at v
  };
  std::vector<Candidate> candidates;
  std::vector<std::int32_t> candidate_of(g.num_edges(), -1);
  for (EdgeId e : induced_edges(g, set)) {
    const ArcId uv = g.edge_arc(e);
    const VertexId u = g.tail(uv);
    const VertexId v = g.head(uv);
    candidate_of[e] = static_cast<std::int32_t>(candidates.size());
    candidates.push_back({e, slot[u], slot[v], g.out_index(uv),
                          g.out_index(g.reverse(uv))});
  }

  std::vector<char> start(candidates.size(), 0);
  if (init) {
    for (EdgeId e : *init) {
      if (e < 0 || e >= static_cast<EdgeId>(g.num_edges()) ||
          candidate_of[e] < 0) {
        throw std::domain_error("initial backbone edge " + std::to_string(e) +
                                " is not inside the vertex set");
      }
      start[candidate_of[e]] = 1;
    }
  }

  auto assign = [&](std::vector<VertexState>& states, std::size_t k, char c) {
    const Candidate& cand = candidates[k];
    states[cand.su].set_class(cand.iu, c);
    states[cand.sv].set_class(cand.iv, c);
  };

  std::optional<SetPartitionResult> best;
  const int runs = init ? 1 : options.restarts;
  for (int r = 0; r < runs; ++r) {
    std::vector<VertexState> states =
        r + 1 == runs ? std::move(base) : base;
    std::vector<char> cls = start;
    if (!init) {
      auto rng = make_rng(seed, static_cast<std::uint64_t>(r), 0);
      std::bernoulli_distribution coin(0.5);
      for (char& c : cls) c = coin(rng) ? 1 : 0;
    }
    for (std::size_t k = 0; k < candidates.size(); ++k) assign(states, k, cls[k]);

    auto sweep = [&] {
      bool changed = false;
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        const Candidate& cand = candidates[k];
        VertexState& a = states[cand.su];
        VertexState& b = states[cand.sv];
        const double to_backbone = a.trial(cand.iu, 1) + b.trial(cand.iv, 1);
        const double to_other = a.trial(cand.iu, 0) + b.trial(cand.iv, 0);
        const char c = to_backbone < to_other - options.tolerance ? 1 : 0;
        if (c != cls[k]) changed = true;
        cls[k] = c;
        assign(states, k, c);
        a.claim(cand.iu, c);
        b.claim(cand.iv, c);
      }
      return changed;
    };
    auto refit = [&] {
      for (VertexState& s : states) s.refit();
    };
    auto objective = [&] {
      double total = 0.0;
      for (const VertexState& s : states) total += s.objective();
      return total;
    };
    PartitionTrace trace = run_kmeans(options, sweep, refit, objective);
    trace.seed = seed;

    if (best && !(trace.objectives.back() < best->objective)) continue;
    SetPartitionResult result;
    result.backbone.vertices = set;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (cls[k]) result.backbone.edges.push_back(candidates[k].edge);
    }
    for (const VertexState& s : states) {
      result.partitions.push_back(s.partition());
      result.centroids.push_back(s.row());
    }
    result.objective = trace.objectives.back();
    result.trace = std::move(trace);
    best = std::move(result);
  }
  return *std::move(best);
}

}  // namespace backbone
