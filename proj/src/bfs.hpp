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

#ifndef AVEC_SRC_BFS_HPP_
#define AVEC_SRC_BFS_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "avec/graph.hpp"

namespace avec::internal {

// Reusable BFS workspace. dist is -1 for unvisited vertices after Run().
class Bfs {
 public:
  explicit Bfs(std::size_t n) : dist_(n, -1) { queue_.reserve(n); }

  // Returns the largest distance reached.
  std::int32_t Run(const Graph& g, std::span<const Vertex> sources) {
    for (Vertex v : queue_) dist_[v] = -1;
    queue_.clear();
    for (Vertex s : sources) {
      if (dist_[s] < 0) {
        dist_[s] = 0;
        queue_.push_back(s);
      }
    }
    std::int32_t far = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex x = queue_[head];
      std::int32_t dx = dist_[x];
      far = dx;
      for (Vertex y : g.neighbors(x)) {
        if (dist_[y] < 0) {
          dist_[y] = dx + 1;
          queue_.push_back(y);
        }
      }
    }
    return far;
  }

  std::int32_t Run(const Graph& g, Vertex source) {
    return Run(g, std::span<const Vertex>(&source, 1));
  }

  const std::vector<std::int32_t>& dist() const { return dist_; }
  // Visited vertices in BFS order.
  const std::vector<Vertex>& order() const { return queue_; }

 private:
  std::vector<std::int32_t> dist_;
  std::vector<Vertex> queue_;
};

// Calls fn(first, last, bfs) on contiguous source ranges, possibly on several
// threads. Each call owns its own workspace.
void ParallelSources(std::size_t n,
                     const std::function<void(Vertex, Vertex, Bfs&)>& fn);

void ValidateVertex(const Graph& g, Vertex v);

}  // namespace avec::internal

#endif  // AVEC_SRC_BFS_HPP_
