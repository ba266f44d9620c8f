// Copyright 2026 The Robonet Authors
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

#ifndef ROBONET__FLOW_NETWORK_HPP_
#define ROBONET__FLOW_NETWORK_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace robonet::detail
{

/// Dinic blocking-flow max-flow. With unit capacities this runs in
/// O(E * sqrt(V)) per call.
class FlowNetwork
{
public:
  using Capacity = std::int64_t;
  static constexpr Capacity infinite = std::numeric_limits<Capacity>::max() / 4;

  explicit FlowNetwork(int node_count) : adj_(static_cast<std::size_t>(node_count)) {}

  int add_arc(int from, int to, Capacity capacity)
  {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity});
    arcs_.push_back({from, 0});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  Capacity max_flow(int source, int sink)
  {
    Capacity total = 0;
    while (bfs(source, sink)) {
      next_.assign(adj_.size(), 0);
      while (const Capacity pushed = dfs(source, sink, infinite)) {
        total += pushed;
      }
    }
    return total;
  }

  /// Nodes reachable from `source` in the residual network after max_flow.
  std::vector<bool> source_side(int source) const
  {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int id : adj_[v]) {
        const auto & arc = arcs_[id];
        if (arc.residual > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

private:
  struct Arc
  {
    int to;
    Capacity residual;
  };

  bool bfs(int source, int sink)
  {
    level_.assign(adj_.size(), -1);
    std::vector<int> queue{source};
    level_[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (const int id : adj_[v]) {
        const auto & arc = arcs_[id];
        if (arc.residual > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[v] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Capacity dfs(int v, int sink, Capacity limit)
  {
    if (v == sink) {
      return limit;
    }
    for (auto & i = next_[v]; i < adj_[v].size(); ++i) {
      const int id = adj_[v][i];
      auto & arc = arcs_[id];
      if (arc.residual <= 0 || level_[arc.to] != level_[v] + 1) {
        continue;
      }
      if (const Capacity pushed = dfs(arc.to, sink, std::min(limit, arc.residual)); pushed > 0) {
        arc.residual -= pushed;
        arcs_[id ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace robonet::detail

#endif  // ROBONET__FLOW_NETWORK_HPP_
