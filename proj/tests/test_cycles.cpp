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

#include "avec/generators.hpp"
#include "avec/graph.hpp"
#include "avec/graph_io.hpp"
#include "oracle.hpp"

namespace avec {
namespace {

TEST(Girth, Classics) {
  EXPECT_FALSE(ComputeGirth(Classic(ClassicKind::kPath, 10)).has_value());
  EXPECT_FALSE(ComputeGirth(Classic(ClassicKind::kStar, 6)).has_value());
  EXPECT_EQ(ComputeGirth(Classic(ClassicKind::kCycle, 9)), 9u);
  EXPECT_EQ(ComputeGirth(Classic(ClassicKind::kComplete, 4)), 3u);
  EXPECT_EQ(ComputeGirth(ParseGraph6("IheA@GUAo")), 5u);  // Petersen
}

TEST(Girth, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng() % 25);
    auto edges = oracle::RandomConnected(n, static_cast<int>(rng() % 6), rng);
    Graph g = oracle::ToGraph(n, edges);
    int expected = oracle::Girth(n, oracle::Edges(g));
    Girth got = ComputeGirth(g);
    if (expected == oracle::kInf) {
      EXPECT_FALSE(got.has_value());
    } else {
      EXPECT_EQ(got, static_cast<std::uint32_t>(expected));
    }
  }
}

TEST(ForbiddenCycles, MatchesOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 3 + static_cast<int>(rng() % 14);
    auto edges = oracle::RandomConnected(n, static_cast<int>(rng() % 8), rng);
    Graph g = oracle::ToGraph(n, edges);
    auto list = oracle::Edges(g);
    CycleScan scan = ScanForbiddenCycles(g);
    EXPECT_EQ(scan.has_c3, oracle::HasCycle(n, list, 3));
    EXPECT_EQ(scan.has_c4, oracle::HasCycle(n, list, 4));
    EXPECT_EQ(scan.has_c5, oracle::HasCycle(n, list, 5));
  }
}

TEST(ForbiddenCycles, SubgraphNotInduced) {
  // K4 contains a 4-cycle as a subgraph even though no induced one.
  CycleScan k4 = ScanForbiddenCycles(Classic(ClassicKind::kComplete, 4));
  EXPECT_TRUE(k4.has_c3);
  EXPECT_TRUE(k4.has_c4);
  EXPECT_FALSE(k4.has_c5);
  EXPECT_FALSE(k4.c4c5_free());
  CycleScan k5 = ScanForbiddenCycles(Classic(ClassicKind::kComplete, 5));
  EXPECT_TRUE(k5.has_c5);
  CycleScan c6 = ScanForbiddenCycles(Classic(ClassicKind::kCycle, 6));
  EXPECT_TRUE(c6.girth_six());
}

}  // namespace
}  // namespace avec
