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

// Serialization: discovery reports and bench results as JSON / CSV, and
// Graphviz export with the backbone highlighted. Vertices are written by
// label.

#ifndef BACKBONE_REPORT_IO_H_
#define BACKBONE_REPORT_IO_H_

#include <span>
#include <string>
#include <string_view>

#include "backbone/bench.h"
#include "backbone/discovery.h"
#include "backbone/graph.h"

namespace backbone {

std::string report_json(const Graph& g, const DiscoveryResult& result,
                        const DiscoveryConfig& config, bool with_trace);

// Reads the backbone section of a report back onto g. Throws
// std::invalid_argument on malformed JSON or labels unknown to g.
Backbone backbone_from_report(const Graph& g, std::string_view json_text);

std::string bench_json(std::span<const BenchResult> results);
// Header row, then one row per result.
std::string bench_csv(std::span<const BenchResult> results);

// Undirected DOT in vertex then edge index order; backbone vertices and
// edges carry class="backbone".
std::string export_dot(const Graph& g, const Backbone& b);

}  // namespace backbone

#endif  // BACKBONE_REPORT_IO_H_
