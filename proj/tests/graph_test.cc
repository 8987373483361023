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

#include "backbone/graph.h"

#include <gtest/gtest.h>

#include "test_graphs.h"

namespace backbone {
namespace {

using testing::make_graph;
using testing::path_graph;

TEST(ParseEdgeList, BuildsPathGraph) {
  Graph g = parse_edge_list("a b\nb c\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.num_arcs(), 4u);
  EXPECT_EQ(g.label(0), "a");
  EXPECT_EQ(*g.find_vertex("c"), 2);
}

TEST(ParseEdgeList, CollapsesReversedDuplicate) {
  EdgeListWarnings warnings;
  Graph g = parse_edge_list("a b\nb a\n", &warnings);
  EXPECT_EQ(g.num_vertices(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(warnings.duplicate_edges, 1u);
}

TEST(ParseEdgeList, SkipsCommentsBlankLinesAndCarriageReturns) {
  Graph g = parse_edge_list("# header\n\n  \na\tb\r\n# c d\nb c\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.label(1), "b");
}

TEST(ParseEdgeList, ReportsLineOfMalformedInput) {
  try {
    parse_edge_list("a b\nb c d\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_edge_list("lonely\n"), ParseError);
}

TEST(ParseEdgeList, RejectsSelfLoopByLabel) {
  try {
    parse_edge_list("a b\nq q\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("'q'"), std::string::npos);
  }
}

TEST(Graph, ArcInvariants) {
  Graph g = testing::random_connected(9, 0.3, 5);
  for (ArcId a = 0; a < static_cast<ArcId>(g.num_arcs()); ++a) {
    EXPECT_EQ(g.reverse(g.reverse(a)), a);
    EXPECT_NE(g.reverse(a), a);
    EXPECT_EQ(g.tail(g.reverse(a)), g.head(a));
    EXPECT_EQ(g.find_arc(g.tail(a), g.head(a)), a);
    auto [u, v] = g.edge(g.edge_of(a));
    EXPECT_EQ(std::min(g.tail(a), g.head(a)), u);
    EXPECT_EQ(std::max(g.tail(a), g.head(a)), v);
  }
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    auto row = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
    EXPECT_EQ(std::adjacent_find(row.begin(), row.end()), row.end());
    for (std::size_t i = 0; i < row.size(); ++i) {
      EXPECT_EQ(g.tail(g.in_arc(v, i)), row[i]);
      EXPECT_EQ(g.head(g.in_arc(v, i)), v);
    }
  }
  EXPECT_EQ(g.find_arc(0, 0), kNoArc);
}

TEST(Graph, FromEdgesRejectsBadInput) {
  EXPECT_THROW(make_graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(make_graph(2, {{0, 2}}), std::invalid_argument);
  std::vector<std::pair<VertexId, VertexId>> none;
  EXPECT_THROW(Graph::FromEdges({"x", "x"}, none), std::invalid_argument);
}

TEST(ToEdgeList, RoundTrips) {
  Graph g = parse_edge_list("x y\ny z\nz x\n");
  Graph again = parse_edge_list(to_edge_list(g));
  EXPECT_EQ(to_edge_list(again), to_edge_list(g));
}

TEST(LargestComponent, TieGoesToComponentOfVertexZero) {
  Graph g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  Graph big = largest_component(g);
  EXPECT_EQ(big.num_vertices(), 3u);
  EXPECT_TRUE(big.find_vertex("0").has_value());
}

TEST(LargestComponent, ConnectedGraphIsUnchanged) {
  Graph g = path_graph(5);
  EXPECT_EQ(to_edge_list(largest_component(g)), to_edge_list(g));
  EXPECT_TRUE(largest_component(Graph()).empty());
}

TEST(LargestComponent, PicksBiggerComponent) {
  Graph g = make_graph(5, {{0, 1}, {2, 3}, {3, 4}});
  Graph big = largest_component(g);
  EXPECT_EQ(big.num_vertices(), 3u);
  EXPECT_EQ(big.label(0), "2");
}

TEST(InducedSubgraph, Examples) {
  Graph p4 = path_graph(4);
  std::vector<VertexId> mid{1, 2};
  Graph sub = induced_subgraph(p4, mid);
  EXPECT_EQ(sub.num_vertices(), 2u);
  EXPECT_EQ(sub.num_edges(), 1u);
  EXPECT_EQ(sub.label(0), "1");
  EXPECT_TRUE(induced_subgraph(p4, std::vector<VertexId>{}).empty());
  Graph tri = testing::cycle_graph(3);
  std::vector<VertexId> all{0, 1, 2};
  EXPECT_EQ(induced_subgraph(tri, all).num_edges(), 3u);
  std::vector<VertexId> bad{7};
  EXPECT_THROW(induced_subgraph(p4, bad), std::domain_error);
}

TEST(IsConnected, Examples) {
  Graph p4 = path_graph(4);
  EXPECT_TRUE(is_connected(p4, std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_FALSE(is_connected(p4, std::vector<VertexId>{0, 3}));
  EXPECT_TRUE(is_connected(p4, std::vector<VertexId>{1, 2}));
  EXPECT_THROW(is_connected(p4, std::vector<VertexId>{}), std::domain_error);
}

TEST(InducedEdges, SortedAndDeduplicated) {
  Graph g = testing::cycle_graph(5);
  auto edges = induced_edges(g, std::vector<VertexId>{3, 2, 1, 2});
  ASSERT_EQ(edges.size(), 2u);
  EXPECT_LT(edges[0], edges[1]);
}

}  // namespace
}  // namespace backbone
