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

#ifndef BACKBONE_BENCH_H_
#define BACKBONE_BENCH_H_

#include <cstdint>
#include <span>
#include <vector>

#include "backbone/discovery.h"
#include "backbone/graph.h"

namespace backbone {

// Preferential attachment: a clique on the first m vertices, then every new
// vertex links to m distinct earlier vertices drawn with probability
// proportional to degree. Labels are "0" .. "n-1". Throws
// std::domain_error unless n > m >= 1.
Graph gen_power_law(std::size_t n, std::size_t m, std::uint64_t seed);

struct BenchResult {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  Method method = Method::kMcg;
  double preprocess_seconds = 0.0;
  double discover_seconds = 0.0;
  ModelReport report;
};

// One result per (size, method), sizes outer. The counters are computed
// once per size and shared by the methods.
std::vector<BenchResult> run_bench(std::span<const std::size_t> sizes,
                                   std::size_t m, std::size_t k,
                                   std::span<const Method> methods,
                                   std::uint64_t seed, int restarts = 5);

}  // namespace backbone

#endif  // BACKBONE_BENCH_H_
