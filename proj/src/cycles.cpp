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
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "avec/graph.hpp"

namespace avec {
namespace {

bool HasTriangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (*ia == *ib) return true;
      if (*ia < *ib) ++ia; else ++ib;
    }
  }
  return false;
}

// Two distinct vertices with two common neighbors span a 4-cycle.
bool HasFourCycle(const Graph& g) {
  const std::uint64_t n = g.order();
  std::unordered_set<std::uint64_t> seen;
  for (Vertex w = 0; w < g.order(); ++w) {
    auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!seen.insert(nb[i] * n + nb[j]).second) return true;
      }
    }
  }
  return false;
}

// Looks for s-a-b-c-d-s with s the smallest vertex on the cycle.
bool HasFiveCycle(const Graph& g) {
  std::vector<Vertex> mark(g.order(), std::numeric_limits<Vertex>::max());
  for (Vertex s = 0; s < g.order(); ++s) {
    auto ns = g.neighbors(s);
    if (ns.size() < 2) continue;
    for (Vertex d : ns) mark[d] = s;
    for (Vertex a : ns) {
      if (a < s) continue;
      for (Vertex b : g.neighbors(a)) {
        if (b <= s) continue;
        for (Vertex c : g.neighbors(b)) {
          if (c <= s || c == a) continue;
          for (Vertex d : g.neighbors(c)) {
            if (d > s && mark[d] == s && d != a && d != b) return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

Girth ComputeGirth(const Graph& g) {
  const std::size_t n = g.order();
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::int32_t> dist(n, -1);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    for (Vertex v : queue) dist[v] = -1;
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      // Nothing shorter than the current best can close beyond this level.
      if (2 * static_cast<std::uint32_t>(dist[x]) + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          best = std::min(best, static_cast<std::uint32_t>(dist[x] + dist[y] + 1));
        }
      }
    }
  }
  if (best == std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return best;
}

CycleScan ScanForbiddenCycles(const Graph& g) {
  CycleScan scan;
  scan.has_c3 = HasTriangle(g);
  scan.has_c4 = HasFourCycle(g);
  scan.has_c5 = HasFiveCycle(g);
  return scan;
}

}  // namespace avec
