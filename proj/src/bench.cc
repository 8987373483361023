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

#include "backbone/bench.h"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <string>

namespace backbone {

Graph gen_power_law(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || n <= m) throw std::domain_error("need n > m >= 1");
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m)};
  std::mt19937_64 rng(seq);

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m * (m - 1) / 2 + m * (n - m));
  // Every edge endpoint once, so a uniform draw is degree-proportional.
  std::vector<VertexId> ends;
  ends.reserve(2 * edges.capacity());
  for (VertexId u = 0; u < static_cast<VertexId>(m); ++u) {
    for (VertexId v = u + 1; v < static_cast<VertexId>(m); ++v) {
      edges.emplace_back(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  }

  std::vector<VertexId> targets;
  for (VertexId v = static_cast<VertexId>(m); v < static_cast<VertexId>(n);
       ++v) {
    targets.clear();
    while (targets.size() < m) {
      VertexId t;
      if (ends.empty()) {
        t = std::uniform_int_distribution<VertexId>(0, v - 1)(rng);
      } else {
        t = ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(
            rng)];
      }
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (VertexId t : targets) {
      edges.emplace_back(t, v);
      ends.push_back(t);
      ends.push_back(v);
    }
  }

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return Graph::FromEdges(std::move(labels), edges);
}

std::vector<BenchResult> run_bench(std::span<const std::size_t> sizes,
                                   std::size_t m, std::size_t k,
                                   std::span<const Method> methods,
                                   std::uint64_t seed, int restarts) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchResult> results;
  for (std::size_t n : sizes) {
    if (n < k) throw std::domain_error("size smaller than K");
    const Graph g = gen_power_law(n, m, seed);
    const auto start = Clock::now();
    const PathStats stats = canonical_paths_stats(g);
    const double preprocess =
        std::chrono::duration<double>(Clock::now() - start).count();
    for (Method method : methods) {
      DiscoveryConfig config;
      config.method = method;
      config.k = k;
      config.seed = seed;
      config.restarts = restarts;
      DiscoveryResult found = discover(g, stats, config);
      BenchResult r;
      r.n = n;
      r.m = m;
      r.k = k;
      r.seed = seed;
      r.method = method;
      r.preprocess_seconds = preprocess;
      r.discover_seconds = found.timings.discover_seconds;
      r.report = std::move(found.report);
      results.push_back(std::move(r));
    }
  }
  return results;
}

}  // namespace backbone
