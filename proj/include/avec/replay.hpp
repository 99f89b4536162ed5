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

#ifndef AVEC_REPLAY_HPP_
#define AVEC_REPLAY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "avec/bounds.hpp"
#include "avec/graph.hpp"
#include "avec/rational.hpp"

namespace avec {

// The two matching-and-tree arguments that bound avec of a girth-6 graph:
// by minimum degree alone, or additionally through a vertex of maximum degree.
enum class ReplayVariant { kGirthSix, kMaxDegree };

std::string_view VariantName(ReplayVariant variant);
std::optional<ReplayVariant> ParseVariant(std::string_view name);

struct Matching {
  ReplayVariant variant = ReplayVariant::kGirthSix;
  std::vector<Edge> edges;      // e_1..e_k in insertion order
  std::optional<Vertex> anchor; // max-degree vertex on e_1 (kMaxDegree)
  // pairwise[i][j] = edge distance between edges[i] and edges[j].
  std::vector<std::vector<std::uint32_t>> pairwise;
};

// Greedy matching whose edges are pairwise far apart.
//
// kGirthSix starts at the smallest edge and repeatedly adds the smallest edge
// at distance exactly 5 from the matching until every edge is within
// distance 4. kMaxDegree starts at the smallest edge through `anchor` and
// adds the smallest edge e with d(e, e_1) >= 6, d(e, e_j) >= 5 for j >= 2,
// and equality in at least one of the two, until no such edge remains.
//
// Throws kDisconnectedGraph, kOutOfRange (minimum degree < 3), kNotGirthSix,
// kMissingParameter (kMaxDegree without anchor), kInvalidArgument (anchor is
// not of maximum degree) and kConstructionInvariantViolated.
Matching BuildMatching(const Graph& g, ReplayVariant variant,
                       std::optional<Vertex> anchor = std::nullopt);

// Spanning tree built from distance-preserving BFS trees around each
// matching edge, joined by connector edges and extended outward so that
// every vertex keeps its distance to the nearest matched vertex.
struct AnchoredTree {
  Graph tree;
  // assignment[x] is the matched vertex x's weight moves to.
  std::vector<Vertex> assignment;
  // owner[x] is the matching index whose ball contains x, or -1.
  std::vector<std::int32_t> owner;
  std::vector<std::vector<Edge>> subtrees;  // T(e_i), including e_i
  std::vector<Edge> connectors;             // f_2..f_k
};

// Throws kConstructionInvariantViolated when a post-condition fails.
AnchoredTree BuildTree(const Graph& g, const Matching& m);

using Value = std::variant<Rational, double>;
double ToDouble(const Value& v);

struct WeightSystem {
  std::vector<std::int64_t> c;      // per vertex of the tree
  std::vector<std::int64_t> cbar;   // per vertex of the tree's line graph
  std::vector<Value> cprime;        // per matching edge
  Value normalized_total;           // sum of cprime
};

// Throws kLemmaBoundViolated if a matching edge carries less weight than the
// ball lemmas guarantee.
WeightSystem ComputeWeights(const AnchoredTree& t, const Matching& m,
                            const StructuralConstants& constants);

struct StepCheck {
  std::string name;
  std::string relation;  // "<=", "<", ">=", "=="
  Value lhs;
  Value rhs;
  bool pass = false;
};

struct ProofTrace {
  ReplayVariant variant = ReplayVariant::kGirthSix;
  std::uint64_t n = 0;
  std::uint32_t delta = 0;
  std::uint32_t max_degree = 0;
  bool girth_six = false;
  bool c4c5_free = false;
  StructuralConstants constants;
  Matching matching;
  AnchoredTree tree;
  WeightSystem weights;

  Rational avec_graph;
  Rational avec_tree;
  Rational avec_c_tree;
  Rational avec_cbar_line;
  std::optional<Rational> avec_cbar_target;
  std::optional<Value> avec_cprime_target;
  std::optional<std::uint32_t> ecc_target_e1;  // kMaxDegree only
  Value final_bound;

  std::vector<StepCheck> checks;
  std::vector<std::string> notes;
  bool pass = false;
};

// Runs the whole argument on g and records every inequality it relies on.
// Construction failures throw; a failed inequality only clears `pass`.
ProofTrace Replay(const Graph& g, ReplayVariant variant,
                  std::optional<Vertex> anchor = std::nullopt);

}  // namespace avec

#endif  // AVEC_REPLAY_HPP_
