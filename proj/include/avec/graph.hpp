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

#ifndef AVEC_GRAPH_HPP_
#define AVEC_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "avec/rational.hpp"

namespace avec {

using Vertex = std::uint32_t;

// Undirected edge. Canonical edges (the ones a Graph hands out) have u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is stored in CSR form with every neighbor list sorted ascending;
// the edge list is sorted lexicographically and its order is the canonical
// edge index used by LineGraph and the proof replay.
class Graph {
 public:
  Graph() = default;

  // Builds the canonical graph. Duplicate and reversed pairs collapse.
  // Throws kInvalidVertex for endpoints >= n and kInvalidEdge for loops.
  static Graph Build(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Edge> edges() const { return edges_; }

  bool HasEdge(Vertex a, Vertex b) const;
  // Position of {a,b} in edges(), if present.
  std::optional<std::size_t> EdgeIndex(Vertex a, Vertex b) const;

  std::size_t MinDegree() const;
  std::size_t MaxDegree() const;
  bool IsConnected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Edge> edges_;
};

// Result of a (multi-source) breadth-first search. Unreachable vertices are
// reported as std::nullopt, never as a large number.
class DistanceVector {
 public:
  DistanceVector(std::vector<Vertex> sources, std::vector<std::int32_t> dist)
      : sources_(std::move(sources)), dist_(std::move(dist)) {}

  std::size_t size() const { return dist_.size(); }
  std::span<const Vertex> sources() const { return sources_; }
  bool reachable(Vertex v) const { return dist_[v] >= 0; }
  std::optional<std::uint32_t> operator[](Vertex v) const {
    if (dist_[v] < 0) return std::nullopt;
    return static_cast<std::uint32_t>(dist_[v]);
  }
  // Throws kDisconnectedGraph when v is unreachable.
  std::uint32_t at(Vertex v) const;

 private:
  std::vector<Vertex> sources_;
  std::vector<std::int32_t> dist_;
};

DistanceVector DistancesFrom(const Graph& g, std::span<const Vertex> sources);

// Dense all-pairs distance table for connected desk-scale graphs.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const { return n_; }
  std::uint32_t operator()(Vertex a, Vertex b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::span<const std::uint32_t> row(Vertex a) const {
    return {table_.data() + static_cast<std::size_t>(a) * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
};

struct EccentricityProfile {
  std::vector<std::uint32_t> ecc;
  std::uint64_t ex_total = 0;
  Rational avec;
  std::uint32_t diameter = 0;
  std::uint32_t radius = 0;
};

// Exact eccentricities by one BFS per vertex. Throws kDisconnectedGraph on
// disconnected input and kInvalidArgument on the empty graph.
EccentricityProfile ComputeEccentricities(const Graph& g);

// sum_v w(v) ecc(v) / sum_v w(v); throws kInvalidWeights when the weights are
// negative, mismatched in length or sum to zero.
Rational WeightedAverage(std::span<const std::uint32_t> ecc,
                         std::span<const Rational> weights);
Rational WeightedAvec(const Graph& g, std::span<const Rational> weights);

// std::nullopt means the graph is a forest.
using Girth = std::optional<std::uint32_t>;
Girth ComputeGirth(const Graph& g);

struct CycleScan {
  bool has_c3 = false;
  bool has_c4 = false;
  bool has_c5 = false;

  bool girth_six() const { return !has_c3 && !has_c4 && !has_c5; }
  bool c4c5_free() const { return !has_c4 && !has_c5; }
};

// Subgraph (not induced) detection of 3-, 4- and 5-cycles. The 5-cycle search
// is exhaustive and meant for graphs up to ~20000 edges.
CycleScan ScanForbiddenCycles(const Graph& g);

// Vertices within distance k of some vertex of `sources`, sorted ascending.
std::vector<Vertex> Ball(const Graph& g, std::span<const Vertex> sources,
                         std::uint32_t k);

// Smallest vertex distance between an endpoint of e and an endpoint of f.
std::uint32_t EdgeDistance(const Graph& g, Edge e, Edge f);

struct LineGraph {
  Graph graph;
  // edge_of[i] is the edge of the source graph behind line-graph vertex i;
  // it is the source graph's edges() order.
  std::vector<Edge> edge_of;
};

LineGraph MakeLineGraph(const Graph& g);

// Same vertex set, u ~ v iff 1 <= d(u,v) <= k. Requires k >= 1.
Graph PowerGraph(const Graph& g, std::uint32_t k);

struct Subgraph {
  Graph graph;
  // original[i] is the vertex of the source graph behind vertex i.
  std::vector<Vertex> original;
};

// Induced subgraph on the given vertices, relabeled in ascending order.
Subgraph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace avec

#endif  // AVEC_GRAPH_HPP_
