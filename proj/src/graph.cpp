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

#include "avec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "avec/error.hpp"
#include "bfs.hpp"

namespace avec {
namespace internal {

void ParallelSources(std::size_t n,
                     const std::function<void(Vertex, Vertex, Bfs&)>& fn) {
  constexpr std::size_t kMinPerThread = 256;
  std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::size_t workers = std::min(hw, std::max<std::size_t>(1, n / kMinPerThread));
  if (workers <= 1) {
    Bfs bfs(n);
    fn(0, static_cast<Vertex>(n), bfs);
    return;
  }
  std::vector<std::jthread> pool;
  std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    auto first = static_cast<Vertex>(std::min(n, w * chunk));
    auto last = static_cast<Vertex>(std::min(n, (w + 1) * chunk));
    if (first == last) break;
    pool.emplace_back([&fn, first, last, n] {
      Bfs bfs(n);
      fn(first, last, bfs);
    });
  }
}

void ValidateVertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(v) + " out of range for order " +
                    std::to_string(g.order()));
  }
}

}  // namespace internal

Graph Graph::Build(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidVertex,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidEdge, "self-loop at " + std::to_string(e.u));
    }
    canon.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : canon) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.resize(2 * canon.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Visiting edges in lexicographic order fills every list already sorted:
  // u's neighbors v arrive ascending, and v's smaller neighbors u as well.
  for (const Edge& e : canon) g.targets_[fill[e.v]++] = e.u;
  for (const Edge& e : canon) g.targets_[fill[e.u]++] = e.v;
  g.edges_ = std::move(canon);
  return g;
}

bool Graph::HasEdge(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::EdgeIndex(Vertex a, Vertex b) const {
  Edge e = a < b ? Edge{a, b} : Edge{b, a};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::MinDegree() const {
  std::size_t best = order() == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::MaxDegree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::IsConnected() const {
  if (order() <= 1) return true;
  internal::Bfs bfs(order());
  bfs.Run(*this, Vertex{0});
  return bfs.order().size() == order();
}

std::uint32_t DistanceVector::at(Vertex v) const {
  if (dist_.at(v) < 0) {
    throw Error(ErrorCode::kDisconnectedGraph,
                "vertex " + std::to_string(v) + " is unreachable");
  }
  return static_cast<std::uint32_t>(dist_[v]);
}

DistanceVector DistancesFrom(const Graph& g, std::span<const Vertex> sources) {
  if (sources.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty source set");
  }
  for (Vertex s : sources) internal::ValidateVertex(g, s);
  internal::Bfs bfs(g.order());
  bfs.Run(g, sources);
  std::vector<Vertex> src(sources.begin(), sources.end());
  std::sort(src.begin(), src.end());
  src.erase(std::unique(src.begin(), src.end()), src.end());
  return DistanceVector(std::move(src), bfs.dist());
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
  if (!g.IsConnected()) {
    throw Error(ErrorCode::kDisconnectedGraph, "all-pairs distances need a connected graph");
  }
  table_.resize(n_ * n_);
  internal::ParallelSources(n_, [&](Vertex first, Vertex last, internal::Bfs& bfs) {
    for (Vertex s = first; s < last; ++s) {
      bfs.Run(g, s);
      const auto& d = bfs.dist();
      std::copy(d.begin(), d.end(), table_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  });
}

EccentricityProfile ComputeEccentricities(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty graph has no eccentricities");
  if (!g.IsConnected()) {
    throw Error(ErrorCode::kDisconnectedGraph, "eccentricity of a disconnected graph");
  }
  EccentricityProfile p;
  p.ecc.assign(n, 0);
  internal::ParallelSources(n, [&](Vertex first, Vertex last, internal::Bfs& bfs) {
    for (Vertex s = first; s < last; ++s) {
      p.ecc[s] = static_cast<std::uint32_t>(bfs.Run(g, s));
    }
  });
  p.ex_total = std::accumulate(p.ecc.begin(), p.ecc.end(), std::uint64_t{0});
  p.avec = Rational(static_cast<std::int64_t>(p.ex_total), static_cast<std::int64_t>(n));
  auto [lo, hi] = std::minmax_element(p.ecc.begin(), p.ecc.end());
  p.radius = *lo;
  p.diameter = *hi;
  return p;
}

Rational WeightedAverage(std::span<const std::uint32_t> ecc,
                         std::span<const Rational> weights) {
  if (ecc.size() != weights.size()) {
    throw Error(ErrorCode::kInvalidWeights,
                "expected " + std::to_string(ecc.size()) + " weights, got " +
                    std::to_string(weights.size()));
  }
  Rational total(0);
  Rational weighted(0);
  for (std::size_t i = 0; i < ecc.size(); ++i) {
    if (weights[i] < Rational(0)) {
      throw Error(ErrorCode::kInvalidWeights, "negative weight at " + std::to_string(i));
    }
    total += weights[i];
    weighted += weights[i] * Rational(static_cast<std::int64_t>(ecc[i]));
  }
  if (total == Rational(0)) throw Error(ErrorCode::kInvalidWeights, "total weight is zero");
  return weighted / total;
}

Rational WeightedAvec(const Graph& g, std::span<const Rational> weights) {
  if (weights.size() != g.order()) {
    throw Error(ErrorCode::kInvalidWeights, "weight count does not match order");
  }
  return WeightedAverage(ComputeEccentricities(g).ecc, weights);
}

}  // namespace avec
