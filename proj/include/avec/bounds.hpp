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

#ifndef AVEC_BOUNDS_HPP_
#define AVEC_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avec/graph.hpp"
#include "avec/rational.hpp"

namespace avec {

// Absolute tolerance applied on the bound side whenever a square root makes
// a bound irrational. Exact rationals are compared exactly.
inline constexpr double kBoundTolerance = 1e-9;

struct StructuralConstants {
  std::uint32_t delta = 0;
  // 2 delta^2 - 2 delta + 2: edge-ball size in girth-6 graphs.
  std::int64_t delta_star = 0;
  // 2 delta^2 - 5 delta + 5 (even delta) or + 7 (odd delta): the same for
  // graphs without 4- and 5-cycles.
  std::int64_t delta_circ = 0;
  std::optional<std::uint32_t> max_degree;
  // Radius-3 ball sizes around a vertex of degree max_degree.
  std::optional<double> max_degree_star;
  std::optional<double> max_degree_circ;
};

// Throws kOutOfRange if delta < 3 or max_degree < delta.
StructuralConstants ComputeStructuralConstants(
    std::uint32_t delta, std::optional<std::uint32_t> max_degree = std::nullopt);

// Average eccentricity of the path on n vertices, floor(3n^2/4 - n/2) / n.
Rational PathAvec(std::uint64_t n);

enum class BoundKind {
  kPath,                // any connected graph
  kGeneral,             // minimum degree only
  kGirthSix,            // girth >= 6, minimum degree
  kC4C5Free,            // no C4/C5, minimum degree
  kGirthSixMaxDegree,   // girth >= 6, minimum and maximum degree
  kC4C5FreeMaxDegree,   // no C4/C5, minimum and maximum degree
  kChainLower,          // lower bound met by the chain family
};

inline constexpr BoundKind kAllBounds[] = {
    BoundKind::kPath,     BoundKind::kGeneral,           BoundKind::kGirthSix,
    BoundKind::kC4C5Free, BoundKind::kGirthSixMaxDegree, BoundKind::kC4C5FreeMaxDegree,
    BoundKind::kChainLower,
};

// Wire names used in JSON and CSV output.
std::string_view BoundName(BoundKind kind);
std::optional<BoundKind> ParseBoundName(std::string_view name);

struct BoundValue {
  double value = 0.0;
  std::optional<Rational> exact;  // set when the bound is rational
};

// Upper bound on avec for a graph of order n and minimum degree delta.
// The max-degree bounds throw kMissingParameter without max_degree, and
// every bound except kPath and kGeneral needs delta >= 3 (kOutOfRange).
BoundValue UpperBound(BoundKind kind, std::uint64_t n, std::uint32_t delta,
                      std::optional<std::uint32_t> max_degree = std::nullopt);

// 9n / (2 delta*) - 5.
Rational SharpnessLower(std::int64_t n, std::uint32_t delta);

// Ball-size audit against the guaranteed neighbourhood sizes.
struct EdgeBallItem {
  Edge edge;
  std::size_t ball_size = 0;
  std::int64_t margin = 0;  // ball_size - edge_threshold
};

struct VertexBallItem {
  Vertex vertex = 0;
  std::size_t ball_size = 0;
  double margin = 0.0;  // ball_size - vertex_threshold
};

struct BallAudit {
  bool girth_six = false;  // false: audited as a C4/C5-free graph
  std::uint32_t delta = 0;
  std::uint32_t max_degree = 0;
  std::int64_t edge_threshold = 0;
  double vertex_threshold = 0.0;
  std::vector<EdgeBallItem> edges;        // radius 2 around both endpoints
  std::vector<VertexBallItem> vertices;   // radius 3, max-degree vertices
  std::int64_t min_edge_margin = 0;
  double min_vertex_margin = 0.0;
  bool pass = false;
};

// Throws kDisconnectedGraph, kOutOfRange (minimum degree < 3) or
// kNotApplicable (graph has a 4- or 5-cycle).
BallAudit AuditBalls(const Graph& g);

enum class FamilyTag { kNone, kChain };

struct BoundEntry {
  BoundKind kind = BoundKind::kPath;
  BoundValue value;
  bool applicable = false;
  bool is_lower = false;
  // bound - avec for upper bounds, avec - bound for lower bounds.
  std::optional<double> slack;
  std::optional<Rational> exact_slack;
};

struct BoundReport {
  std::uint64_t n = 0;
  std::uint32_t delta = 0;
  std::uint32_t max_degree = 0;
  bool girth_six = false;
  bool c4c5_free = false;
  Girth girth;
  FamilyTag family = FamilyTag::kNone;
  std::uint64_t ex_total = 0;
  Rational avec;
  std::uint32_t diameter = 0;
  std::uint32_t radius = 0;
  std::vector<BoundEntry> bounds;  // in kAllBounds order
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  const BoundEntry& entry(BoundKind kind) const;
};

// Throws kDisconnectedGraph (and kInvalidArgument for the empty graph).
BoundReport Analyze(const Graph& g, FamilyTag family = FamilyTag::kNone);

}  // namespace avec

#endif  // AVEC_BOUNDS_HPP_
