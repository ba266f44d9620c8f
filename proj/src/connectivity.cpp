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

#include "robonet/connectivity.hpp"

#include "flow_network.hpp"
#include "robonet/error.hpp"
#include "separators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace robonet
{

using detail::FlowNetwork;

namespace detail
{

std::optional<Separator> min_vertex_separator(
  const Digraph & g, VertexId target, std::span<const FlowNetwork::Capacity> weight)
{
  if (g.directly_rooted(target)) {
    return std::nullopt;
  }
  // node 0 is the super-source, vertex v splits into 2v (in) and 2v + 1 (out)
  const int n = g.capacity();
  FlowNetwork net(2 * n + 2);
  const auto in_node = [](VertexId v) { return 2 * v; };
  const auto out_node = [](VertexId v) { return 2 * v + 1; };
  for (const auto r : g.roots()) {
    net.add_arc(0, out_node(r), FlowNetwork::infinite);
  }
  for (const auto v : g.followers()) {
    if (v != target) {
      net.add_arc(in_node(v), out_node(v), weight.empty() ? 1 : weight[v]);
    }
  }
  for (const auto & e : g.edges()) {
    if (e.tail != target) {
      net.add_arc(out_node(e.tail), in_node(e.head), FlowNetwork::infinite);
    }
  }
  Separator result;
  result.weight = net.max_flow(0, in_node(target));
  const auto side = net.source_side(0);
  for (const auto v : g.followers()) {
    if (v != target && side[in_node(v)] && !side[out_node(v)]) {
      result.vertices.push_back(v);
    }
  }
  return result;
}

}  // namespace detail

namespace
{

void require_follower(const Digraph & g, VertexId target)
{
  if (g.is_root(target)) {
    throw Error(ErrorCode::TargetIsRoot, "vertex " + std::to_string(target) + " is a root");
  }
  if (!g.contains(target)) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(target) + " is not in the digraph");
  }
}

[[noreturn]] void replay_failure(const char * what)
{
  throw std::logic_error(std::string("witness replay failed: ") + what);
}

}  // namespace

FlowResult max_edge_disjoint(const Digraph & g, VertexId target)
{
  require_follower(g, target);
  FlowNetwork net(g.capacity() + 1);
  for (const auto r : g.roots()) {
    net.add_arc(0, r, FlowNetwork::infinite);
  }
  for (const auto & e : g.edges()) {
    net.add_arc(e.tail, e.head, 1);
  }
  FlowResult result;
  result.value = static_cast<std::int32_t>(net.max_flow(0, target));
  const auto side = net.source_side(0);
  for (const auto & e : g.edges()) {
    if (side[e.tail] && !side[e.head]) {
      result.cut_edges.push_back(e);
    }
  }
  return result;
}

FlowResult max_vertex_disjoint(const Digraph & g, VertexId target)
{
  require_follower(g, target);
  FlowResult result;
  if (const auto sep = detail::min_vertex_separator(g, target)) {
    result.value = static_cast<std::int32_t>(sep->weight);
    result.cut_vertices = sep->vertices;
  } else {
    result.value = g.follower_count();
    result.cut_vertices = g.followers();
  }
  return result;
}

std::int32_t lc(const Digraph & g)
{
  const auto followers = g.followers();
  if (followers.empty()) {
    return 0;
  }
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  for (const auto v : followers) {
    best = std::min(best, max_edge_disjoint(g, v).value);
    if (best == 0) {
      break;
    }
  }
  return best;
}

std::int32_t ac_vertex(const Digraph & g, VertexId v)
{
  return max_vertex_disjoint(g, v).value;
}

std::int32_t ac_over(const Digraph & g, std::span<const VertexId> targets)
{
  if (targets.empty()) {
    return 0;
  }
  const auto seen = reachable_from_roots(g);
  for (const auto v : targets) {
    require_follower(g, v);
    if (!seen[v]) {
      return 0;
    }
  }
  auto best = static_cast<std::int32_t>(targets.size());
  for (const auto v : targets) {
    if (const auto sep = detail::min_vertex_separator(g, v)) {
      best = std::min(best, static_cast<std::int32_t>(sep->weight));
    }
  }
  return best;
}

std::int32_t ac(const Digraph & g)
{
  const auto followers = g.followers();
  return ac_over(g, followers);
}

EdgeSet min_link_cut_witness(const Digraph & g)
{
  if (g.follower_count() == 0 || !is_controllable(g)) {
    throw Error(ErrorCode::Uncontrollable, "no critical link-set: the digraph is not controllable");
  }
  FlowResult best;
  best.value = std::numeric_limits<std::int32_t>::max();
  for (const auto v : g.followers()) {
    auto flow = max_edge_disjoint(g, v);
    if (flow.value < best.value) {
      best = std::move(flow);
    }
  }
  if (survives(g, best.cut_edges, {})) {
    replay_failure("critical link-set does not break controllability");
  }
  for (std::size_t skip = 0; skip < best.cut_edges.size(); ++skip) {
    EdgeSet subset = best.cut_edges;
    subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(skip));
    if (!survives(g, subset, {})) {
      replay_failure("critical link-set is not minimal");
    }
  }
  return best.cut_edges;
}

VertexSet min_agent_cut_witness(const Digraph & g)
{
  if (g.follower_count() == 0 || !is_controllable(g)) {
    throw Error(ErrorCode::Uncontrollable, "no critical agent-set: the digraph is not controllable");
  }
  VertexSet best = g.followers();
  for (const auto v : g.followers()) {
    if (auto sep = detail::min_vertex_separator(g, v); sep && sep->vertices.size() < best.size()) {
      best = std::move(sep->vertices);
    }
  }
  if (survives(g, {}, best)) {
    replay_failure("critical agent-set does not break controllability");
  }
  for (std::size_t skip = 0; skip < best.size(); ++skip) {
    VertexSet subset = best;
    subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(skip));
    if (!survives(g, {}, subset)) {
      replay_failure("critical agent-set is not minimal");
    }
  }
  return best;
}

}  // namespace robonet
