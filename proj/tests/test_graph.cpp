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
#include <vector>

#include "avec/error.hpp"
#include "avec/generators.hpp"
#include "avec/graph.hpp"
#include "oracle.hpp"

namespace avec {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

TEST(Graph, BuildCanonicalizes) {
  std::vector<Edge> edges{{2, 0}, {0, 2}, {1, 2}, {0, 1}};
  Graph g = Graph::Build(3, edges);
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 3u);
  std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), expected.begin(), expected.end()));
  EXPECT_TRUE(g.HasEdge(2, 1));
  EXPECT_EQ(g.EdgeIndex(2, 0), 1u);
  EXPECT_FALSE(g.EdgeIndex(0, 0).has_value());
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(Graph, NeighborsSorted) {
  std::vector<Edge> edges{{0, 5}, {0, 3}, {0, 1}, {0, 4}, {0, 2}};
  Graph g = Graph::Build(6, edges);
  auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  EXPECT_EQ(g.MaxDegree(), 5u);
  EXPECT_EQ(g.MinDegree(), 1u);
}

TEST(Graph, BuildErrors) {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> far{{0, 3}};
  EXPECT_EQ(CodeOf([&] { Graph::Build(2, loop); }), ErrorCode::kInvalidEdge);
  EXPECT_EQ(CodeOf([&] { Graph::Build(3, far); }), ErrorCode::kInvalidVertex);
}

TEST(Graph, DistancesReportUnreachable) {
  std::vector<Edge> edges{{0, 1}, {2, 3}};
  Graph g = Graph::Build(4, edges);
  Vertex s = 0;
  auto d = DistancesFrom(g, {&s, 1});
  EXPECT_EQ(d[1], 1u);
  EXPECT_FALSE(d[2].has_value());
  EXPECT_FALSE(g.IsConnected());
  EXPECT_EQ(CodeOf([&] { (void)d.at(3); }), ErrorCode::kDisconnectedGraph);
  EXPECT_EQ(CodeOf([&] { ComputeEccentricities(g); }), ErrorCode::kDisconnectedGraph);
  EXPECT_EQ(CodeOf([&] { DistanceMatrix m(g); }), ErrorCode::kDisconnectedGraph);
  EXPECT_EQ(CodeOf([&] { ComputeEccentricities(Graph::Build(0, {})); }),
            ErrorCode::kInvalidArgument);
}

TEST(Graph, SingleVertex) {
  Graph g = Graph::Build(1, {});
  auto p = ComputeEccentricities(g);
  EXPECT_EQ(p.avec, Rational(0));
  EXPECT_EQ(p.diameter, 0u);
  EXPECT_TRUE(g.IsConnected());
}

TEST(Graph, EccentricitiesMatchFloydWarshall) {
  std::mt19937_64 rng(20261017);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 40);
    auto edges = oracle::RandomConnected(n, static_cast<int>(rng() % 30), rng);
    Graph g = oracle::ToGraph(n, edges);
    auto d = oracle::FloydWarshall(g);
    auto ecc = oracle::Eccentricities(d);
    auto p = ComputeEccentricities(g);
    ASSERT_EQ(p.ecc.size(), ecc.size());
    for (int v = 0; v < n; ++v) EXPECT_EQ(static_cast<int>(p.ecc[v]), ecc[v]);
    EXPECT_EQ(p.ex_total, static_cast<std::uint64_t>(oracle::TotalEccentricity(d)));
    EXPECT_EQ(p.avec, Rational(oracle::TotalEccentricity(d), n));
    EXPECT_EQ(static_cast<int>(p.diameter), *std::max_element(ecc.begin(), ecc.end()));
    EXPECT_EQ(static_cast<int>(p.radius), *std::min_element(ecc.begin(), ecc.end()));
    DistanceMatrix m(g);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) EXPECT_EQ(static_cast<int>(m(a, b)), d[a][b]);
  }
}

TEST(Graph, KnownEccentricities) {
  // P_5: ecc 4,3,2,3,4.
  auto p = ComputeEccentricities(Classic(ClassicKind::kPath, 5));
  EXPECT_EQ(p.ex_total, 16u);
  EXPECT_EQ(p.avec, Rational(16, 5));
  EXPECT_EQ(ComputeEccentricities(Classic(ClassicKind::kCycle, 7)).avec, Rational(3));
  EXPECT_EQ(ComputeEccentricities(Classic(ClassicKind::kComplete, 6)).avec, Rational(1));
  // Star K_{1,4}: centre 1, leaves 2.
  EXPECT_EQ(ComputeEccentricities(Classic(ClassicKind::kStar, 5)).avec, Rational(9, 5));
}

TEST(Graph, WeightedAverage) {
  Graph g = Classic(ClassicKind::kPath, 3);
  std::vector<Rational> w{Rational(1), Rational(0), Rational(1)};
  EXPECT_EQ(WeightedAvec(g, w), Rational(2));
  std::vector<Rational> centre{Rational(0), Rational(5), Rational(0)};
  EXPECT_EQ(WeightedAvec(g, centre), Rational(1));
  std::vector<Rational> zero(3, Rational(0));
  std::vector<Rational> neg{Rational(1), Rational(-1), Rational(1)};
  std::vector<Rational> short_w{Rational(1)};
  EXPECT_EQ(CodeOf([&] { WeightedAvec(g, zero); }), ErrorCode::kInvalidWeights);
  EXPECT_EQ(CodeOf([&] { WeightedAvec(g, neg); }), ErrorCode::kInvalidWeights);
  EXPECT_EQ(CodeOf([&] { WeightedAvec(g, short_w); }), ErrorCode::kInvalidWeights);
}

}  // namespace
}  // namespace avec
