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

// Slow reference implementations used to cross-check the library. Nothing
// here calls into avec beyond reading a graph's edge list.

#ifndef AVEC_TESTS_ORACLE_HPP_
#define AVEC_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "avec/graph.hpp"

namespace oracle {

inline constexpr int kInf = 1 << 28;

using Matrix = std::vector<std::vector<int>>;
using EdgeList = std::vector<std::pair<int, int>>;

inline EdgeList Edges(const avec::Graph& g) {
  EdgeList out;
  for (const avec::Edge& e : g.edges()) out.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  return out;
}

inline Matrix FloydWarshall(int n, const EdgeList& edges) {
  Matrix d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : edges) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline Matrix FloydWarshall(const avec::Graph& g) {
  return FloydWarshall(static_cast<int>(g.order()), Edges(g));
}

inline std::vector<int> Eccentricities(const Matrix& d) {
  std::vector<int> ecc;
  for (const auto& row : d) ecc.push_back(*std::max_element(row.begin(), row.end()));
  return ecc;
}

// Sum of eccentricities; avec = total / n.
inline std::int64_t TotalEccentricity(const Matrix& d) {
  auto ecc = Eccentricities(d);
  return std::accumulate(ecc.begin(), ecc.end(), std::int64_t{0});
}

// Path P_n has ecc(i) = max(i, n - 1 - i).
inline std::int64_t PathTotalEccentricity(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t i = 0; i < n; ++i) s += std::max(i, n - 1 - i);
  return s;
}

// Shortest cycle through each edge: remove it and measure the detour.
inline int Girth(int n, const EdgeList& edges) {
  int best = kInf;
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    EdgeList rest;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (i != skip) rest.push_back(edges[i]);
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : rest) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<int> dist(n, -1);
    std::vector<int> queue{edges[skip].first};
    dist[edges[skip].first] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int y : adj[queue[h]])
        if (dist[y] < 0) {
          dist[y] = dist[queue[h]] + 1;
          queue.push_back(y);
        }
    if (dist[edges[skip].second] >= 0) best = std::min(best, dist[edges[skip].second] + 1);
  }
  return best;
}

// Whether a cycle of exactly `len` vertices exists, by depth-first search
// over simple paths starting at their smallest vertex.
inline bool HasCycle(int n, const EdgeList& edges, int len) {
  std::vector<std::set<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<int> path;
  std::vector<bool> on(n, false);
  auto dfs = [&](auto&& self, int x) -> bool {
    if (static_cast<int>(path.size()) == len) return adj[x].count(path.front()) > 0;
    for (int y : adj[x]) {
      if (on[y] || y < path.front()) continue;
      on[y] = true;
      path.push_back(y);
      if (self(self, y)) return true;
      path.pop_back();
      on[y] = false;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(on.begin(), on.end(), false);
    on[s] = true;
    if (dfs(dfs, s)) return true;
  }
  return false;
}

inline bool IsBipartite(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Random spanning tree by attaching vertex i to a uniform earlier vertex.
inline EdgeList RandomTree(int n, std::mt19937_64& rng) {
  EdgeList edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(pick(rng), i);
  }
  return edges;
}

// Random connected graph: a random tree plus `extra` random chords.
inline EdgeList RandomConnected(int n, int extra, std::mt19937_64& rng) {
  EdgeList edges = RandomTree(n, rng);
  if (n < 2) return edges;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    int a = pick(rng);
    int b = pick(rng);
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return edges;
}

inline avec::Graph ToGraph(int n, const EdgeList& edges) {
  std::vector<avec::Edge> list;
  for (auto [a, b] : edges) list.push_back({static_cast<avec::Vertex>(a), static_cast<avec::Vertex>(b)});
  return avec::Graph::Build(static_cast<std::size_t>(n), list);
}

}  // namespace oracle

#endif  // AVEC_TESTS_ORACLE_HPP_
