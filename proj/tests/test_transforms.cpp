// Copyright 2026 The avecbound Authors
//
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

#include <gtest/gtest.h>

#include <random>

#include "avec/error.hpp"
#include "avec/generators.hpp"
#include "avec/graph.hpp"
#include "oracle.hpp"

namespace avec {
namespace {

TEST(Ball, MatchesDistances) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 30);
    Graph g = oracle::ToGraph(n, oracle::RandomConnected(n, 5, rng));
    auto d = oracle::FloydWarshall(g);
    Vertex src[] = {0, static_cast<Vertex>(n - 1)};
    for (std::uint32_t k = 0; k < 4; ++k) {
      std::vector<Vertex> expected;
      for (int v = 0; v < n; ++v)
        if (std::min(d[0][v], d[n - 1][v]) <= static_cast<int>(k)) expected.push_back(v);
      EXPECT_EQ(Ball(g, src, k), expected);
    }
  }
}

TEST(EdgeDistance, IsMinimumEndpointDistance) {
  Graph p = Classic(ClassicKind::kPath, 8);
  EXPECT_EQ(EdgeDistance(p, {0, 1}, {5, 6}), 4u);
  EXPECT_EQ(EdgeDistance(p, {2, 3}, {3, 4}), 0u);
  EXPECT_THROW(EdgeDistance(p, {0, 2}, {3, 4}), Error);
}

TEST(LineGraph, StarAndPath) {
  LineGraph star = MakeLineGraph(Classic(ClassicKind::kStar, 5));
  EXPECT_EQ(star.graph.order(), 4u);
  EXPECT_EQ(star.graph.size(), 6u);  // K4
  LineGraph path = MakeLineGraph(Classic(ClassicKind::kPath, 6));
  EXPECT_EQ(path.graph, Classic(ClassicKind::kPath, 5));
  EXPECT_EQ(path.edge_of[2], (Edge{2, 3}));
}

TEST(LineGraph, AdjacencyIsSharedEndpoint) {
  std::mt19937_64 rng(5);
  Graph g = oracle::ToGraph(20, oracle::RandomConnected(20, 10, rng));
  LineGraph l = MakeLineGraph(g);
  for (Vertex a = 0; a < l.graph.order(); ++a) {
    for (Vertex b = a + 1; b < l.graph.order(); ++b) {
      Edge x = l.edge_of[a];
      Edge y = l.edge_of[b];
      bool share = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
      EXPECT_EQ(l.graph.HasEdge(a, b), share);
    }
  }
}

TEST(PowerGraph, MatchesDistances) {
  std::mt19937_64 rng(9);
  Graph g = oracle::ToGraph(25, oracle::RandomConnected(25, 3, rng));
  auto d = oracle::FloydWarshall(g);
  for (std::uint32_t k : {1u, 2u, 3u, 6u}) {
    Graph pk = PowerGraph(g, k);
    for (Vertex a = 0; a < 25; ++a)
      for (Vertex b = 0; b < 25; ++b)
        EXPECT_EQ(pk.HasEdge(a, b), a != b && d[a][b] <= static_cast<int>(k));
  }
  EXPECT_EQ(PowerGraph(g, 1), g);
  EXPECT_THROW(PowerGraph(g, 0), Error);
}

TEST(InducedSubgraph, RelabelsAscending) {
  Graph c = Classic(ClassicKind::kCycle, 6);
  Vertex keep[] = {4, 0, 5, 0};
  Subgraph s = InducedSubgraph(c, keep);
  EXPECT_EQ(s.original, (std::vector<Vertex>{0, 4, 5}));
  EXPECT_EQ(s.graph.size(), 2u);  // 0-5, 4-5
  EXPECT_TRUE(s.graph.HasEdge(0, 2));
  EXPECT_TRUE(s.graph.HasEdge(1, 2));
}

}  // namespace
}  // namespace avec
