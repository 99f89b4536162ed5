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

#include <algorithm>
#include <string>
#include <vector>

#include "avec/error.hpp"
#include "avec/graph.hpp"
#include "bfs.hpp"

namespace avec {

std::vector<Vertex> Ball(const Graph& g, std::span<const Vertex> sources,
                         std::uint32_t k) {
  if (sources.empty()) throw Error(ErrorCode::kInvalidArgument, "ball around empty set");
  for (Vertex s : sources) internal::ValidateVertex(g, s);
  internal::Bfs bfs(g.order());
  bfs.Run(g, sources);
  std::vector<Vertex> out;
  for (Vertex v : bfs.order()) {
    if (static_cast<std::uint32_t>(bfs.dist()[v]) > k) break;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t EdgeDistance(const Graph& g, Edge e, Edge f) {
  for (const Edge& x : {e, f}) {
    if (!g.HasEdge(x.u, x.v)) {
      throw Error(ErrorCode::kInvalidEdge,
                  "(" + std::to_string(x.u) + "," + std::to_string(x.v) + ") is not an edge");
    }
  }
  const Vertex src[] = {e.u, e.v};
  internal::Bfs bfs(g.order());
  bfs.Run(g, src);
  std::int32_t a = bfs.dist()[f.u];
  std::int32_t b = bfs.dist()[f.v];
  if (a < 0 && b < 0) {
    throw Error(ErrorCode::kDisconnectedGraph, "edges lie in different components");
  }
  if (a < 0) return static_cast<std::uint32_t>(b);
  if (b < 0) return static_cast<std::uint32_t>(a);
  return static_cast<std::uint32_t>(std::min(a, b));
}

LineGraph MakeLineGraph(const Graph& g) {
  LineGraph lg;
  lg.edge_of.assign(g.edges().begin(), g.edges().end());
  std::vector<Edge> adj;
  std::vector<Vertex> incident;
  for (Vertex w = 0; w < g.order(); ++w) {
    incident.clear();
    for (Vertex x : g.neighbors(w)) incident.push_back(static_cast<Vertex>(*g.EdgeIndex(w, x)));
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        adj.push_back({incident[i], incident[j]});
      }
    }
  }
  lg.graph = Graph::Build(g.size(), adj);
  return lg;
}

Graph PowerGraph(const Graph& g, std::uint32_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "graph power needs k >= 1");
  std::vector<Edge> edges;
  internal::Bfs bfs(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    bfs.Run(g, s);
    for (Vertex v : bfs.order()) {
      auto d = static_cast<std::uint32_t>(bfs.dist()[v]);
      if (d > k) break;
      if (v > s) edges.push_back({s, v});
    }
  }
  return Graph::Build(g.order(), edges);
}

Subgraph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.original.assign(vertices.begin(), vertices.end());
  for (Vertex v : sub.original) internal::ValidateVertex(g, v);
  std::sort(sub.original.begin(), sub.original.end());
  sub.original.erase(std::unique(sub.original.begin(), sub.original.end()),
                     sub.original.end());
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> index(g.order(), kAbsent);
  for (std::size_t i = 0; i < sub.original.size(); ++i) {
    index[sub.original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] != kAbsent && index[e.v] != kAbsent) {
      edges.push_back({index[e.u], index[e.v]});
    }
  }
  sub.graph = Graph::Build(sub.original.size(), edges);
  return sub;
}

}  // namespace avec
