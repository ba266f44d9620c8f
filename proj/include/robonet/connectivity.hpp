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

#ifndef ROBONET__CONNECTIVITY_HPP_
#define ROBONET__CONNECTIVITY_HPP_

#include "robonet/digraph.hpp"

#include <cstdint>
#include <span>

namespace robonet
{

/// Maximum number of disjoint root-to-target paths with a matching minimum
/// separator. In edge mode `cut_edges` holds the separator, in vertex mode
/// `cut_vertices` does.
struct FlowResult
{
  std::int32_t value = 0;
  EdgeSet cut_edges;
  VertexSet cut_vertices;
};

/// Edge-disjoint paths from the (contracted) root-set to `target`. The cut is
/// the out-cut of the vertices reachable in the final residual network.
/// Throws TargetIsRoot.
FlowResult max_edge_disjoint(const Digraph & g, VertexId target);

/// Internally vertex-disjoint root-to-target paths, i.e. the fewest followers
/// other than `target` whose loss cuts it off. When a root feeds `target`
/// directly no such set exists and the value is |V| - |R| with every
/// follower as the separator. Throws TargetIsRoot.
FlowResult max_vertex_disjoint(const Digraph & g, VertexId target);

/// Link controllability degree; 0 when uncontrollable or follower-free.
std::int32_t lc(const Digraph & g);

/// ac(g, v): the vertex-mode flow value of `v`, 0 if `v` is unreachable.
std::int32_t ac_vertex(const Digraph & g, VertexId v);

/// Agent controllability degree, capped at |V| - |R|; 0 when uncontrollable
/// or follower-free.
std::int32_t ac(const Digraph & g);

/// Agent controllability degree restricted to a target subset of the
/// followers: the fewest followers (targets or not) whose loss cuts off a
/// surviving target, or |targets| when only losing all of them does.
/// Used on edge-duplicates, where black vertices model links rather than
/// agents.
std::int32_t ac_over(const Digraph & g, std::span<const VertexId> targets);

/// A critical link-set of size lc(g), replay-verified. Throws Uncontrollable.
EdgeSet min_link_cut_witness(const Digraph & g);

/// A critical agent-set of size ac(g), replay-verified. Throws Uncontrollable.
VertexSet min_agent_cut_witness(const Digraph & g);

}  // namespace robonet

#endif  // ROBONET__CONNECTIVITY_HPP_
