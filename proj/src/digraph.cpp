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

#include "robonet/digraph.hpp"

#include "robonet/error.hpp"

#include <algorithm>
#include <string>

namespace robonet
{

namespace
{

std::string edge_str(Edge e)
{
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

std::vector<bool> membership(const Digraph & g, std::span<const VertexId> x)
{
  std::vector<bool> in(static_cast<std::size_t>(g.capacity()) + 1, false);
  for (const auto v : x) {
    if (!g.contains(v)) {
      throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " is not in the digraph");
    }
    in[v] = true;
  }
  return in;
}

}  // namespace

Digraph Digraph::create(VertexId n, std::span<const VertexId> roots, std::span<const Edge> edges)
{
  if (n < 1) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex count must be at least 1");
  }
  if (roots.empty()) {
    throw Error(ErrorCode::EmptyRootSet, "at least one root is required");
  }
  Digraph g;
  g.n_ = n;
  g.present_.assign(static_cast<std::size_t>(n) + 1, true);
  g.present_[0] = false;
  g.present_count_ = n;
  g.root_.assign(static_cast<std::size_t>(n) + 1, false);
  for (const auto r : roots) {
    if (r < 1 || r > n) {
      throw Error(ErrorCode::IndexOutOfRange, "root " + std::to_string(r) + " outside 1.." + std::to_string(n));
    }
    g.root_[r] = true;
  }
  for (VertexId v = 1; v <= n; ++v) {
    if (g.root_[v]) {
      g.roots_.push_back(v);
    }
  }
  g.edges_.reserve(edges.size());
  for (const auto e : edges) {
    if (e.tail < 1 || e.tail > n || e.head < 1 || e.head > n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge " + edge_str(e) + " has an endpoint outside 1.." + std::to_string(n));
    }
    if (e.tail == e.head) {
      throw Error(
        ErrorCode::SelfLoop, "edge " + edge_str(e) +
        " is a self-loop; follower self-loops are implicit in the model and must be omitted");
    }
    if (g.root_[e.head]) {
      throw Error(
        ErrorCode::RootInEdgeHead, "edge " + edge_str(e) + " enters root " + std::to_string(e.head) +
        "; no edge may enter the root-set");
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.index();
  return g;
}

void Digraph::index()
{
  out_.assign(static_cast<std::size_t>(n_) + 1, {});
  in_.assign(static_cast<std::size_t>(n_) + 1, {});
  for (const auto & e : edges_) {
    out_[e.tail].push_back(e.head);
    in_[e.head].push_back(e.tail);
  }
  // edges_ is sorted by tail then head, so out_ lists are ascending already
  for (auto & list : in_) {
    std::sort(list.begin(), list.end());
  }
}

bool Digraph::has_edge(Edge e) const
{
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

VertexSet Digraph::vertices() const
{
  VertexSet result;
  result.reserve(static_cast<std::size_t>(present_count_));
  for (VertexId v = 1; v <= n_; ++v) {
    if (present_[v]) {
      result.push_back(v);
    }
  }
  return result;
}

VertexSet Digraph::followers() const
{
  VertexSet result;
  for (VertexId v = 1; v <= n_; ++v) {
    if (present_[v] && !root_[v]) {
      result.push_back(v);
    }
  }
  return result;
}

EdgeSet Digraph::out_edges(VertexId v) const
{
  EdgeSet result;
  for (const auto h : out_[v]) {
    result.push_back({v, h});
  }
  return result;
}

EdgeSet Digraph::in_edges(VertexId v) const
{
  EdgeSet result;
  for (const auto t : in_[v]) {
    result.push_back({t, v});
  }
  return result;
}

bool Digraph::directly_rooted(VertexId v) const
{
  const auto & tails = in_[v];
  return std::any_of(tails.begin(), tails.end(), [this](VertexId t) { return root_[t]; });
}

std::vector<bool> reachable_from_roots(const Digraph & g)
{
  std::vector<bool> seen(static_cast<std::size_t>(g.capacity()) + 1, false);
  std::vector<VertexId> stack(g.roots().begin(), g.roots().end());
  for (const auto r : stack) {
    seen[r] = true;
  }
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto w : g.out_neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool is_controllable(const Digraph & g)
{
  const auto seen = reachable_from_roots(g);
  for (VertexId v = 1; v <= g.capacity(); ++v) {
    if (g.is_follower(v) && !seen[v]) {
      return false;
    }
  }
  return true;
}

Digraph remove_edges(const Digraph & g, std::span<const Edge> loss)
{
  EdgeSet sorted_loss(loss.begin(), loss.end());
  std::sort(sorted_loss.begin(), sorted_loss.end());
  sorted_loss.erase(std::unique(sorted_loss.begin(), sorted_loss.end()), sorted_loss.end());
  for (const auto e : sorted_loss) {
    if (!g.has_edge(e)) {
      throw Error(ErrorCode::UnknownEdge, "edge " + edge_str(e) + " is not in the digraph");
    }
  }
  Digraph result = g;
  result.edges_.clear();
  std::set_difference(
    g.edges_.begin(), g.edges_.end(), sorted_loss.begin(), sorted_loss.end(),
    std::back_inserter(result.edges_));
  result.index();
  return result;
}

Digraph remove_vertices(const Digraph & g, std::span<const VertexId> loss)
{
  Digraph result = g;
  for (const auto v : loss) {
    if (g.is_root(v)) {
      throw Error(ErrorCode::RootRemoval, "root " + std::to_string(v) + " cannot fail");
    }
    if (!g.contains(v)) {
      throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " is not in the digraph");
    }
    if (result.present_[v]) {
      result.present_[v] = false;
      --result.present_count_;
    }
  }
  std::erase_if(result.edges_, [&](const Edge & e) {
    return !result.present_[e.tail] || !result.present_[e.head];
  });
  result.index();
  return result;
}

bool survives(const Digraph & g, std::span<const Edge> links, std::span<const VertexId> agents)
{
  const auto after = remove_vertices(remove_edges(g, links), agents);
  if (g.follower_count() > 0 && after.follower_count() == 0) {
    return false;
  }
  return is_controllable(after);
}

Cut out_cut(const Digraph & g, std::span<const VertexId> x)
{
  const auto in = membership(g, x);
  Cut cut{{}, CutSide::out};
  for (const auto & e : g.edges()) {
    if (in[e.tail] && !in[e.head]) {
      cut.members.push_back(e);
    }
  }
  return cut;
}

Cut in_cut(const Digraph & g, std::span<const VertexId> x)
{
  const auto in = membership(g, x);
  Cut cut{{}, CutSide::in};
  for (const auto & e : g.edges()) {
    if (!in[e.tail] && in[e.head]) {
      cut.members.push_back(e);
    }
  }
  return cut;
}

VertexSet EdgeDuplicate::white_followers() const
{
  VertexSet result;
  for (VertexId v = 1; v < static_cast<VertexId>(white_of.size()); ++v) {
    if (white_of[v] != 0 && graph.is_follower(v)) {
      result.push_back(v);
    }
  }
  return result;
}

EdgeDuplicate edge_duplicate(const Digraph & g)
{
  const VertexId n = g.capacity();
  const auto edge_count = g.edge_count();
  EdgeDuplicate dup;
  dup.white_of.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto v : g.vertices()) {
    dup.white_of[v] = v;
  }
  EdgeSet split;
  split.reserve(static_cast<std::size_t>(edge_count) * 2);
  VertexId next = n + 1;
  for (const auto & e : g.edges()) {
    dup.black_of.emplace(e, next);
    dup.edge_of_black.push_back(e);
    split.push_back({e.tail, next});
    split.push_back({next, e.head});
    ++next;
  }
  const VertexSet roots(g.roots().begin(), g.roots().end());
  auto graph = Digraph::create(n + edge_count, roots, split);
  // vertices absent from g stay absent among the white vertices
  VertexSet absent;
  for (VertexId v = 1; v <= n; ++v) {
    if (!g.contains(v)) {
      absent.push_back(v);
    }
  }
  dup.graph = absent.empty() ? std::move(graph) : remove_vertices(graph, absent);
  return dup;
}

}  // namespace robonet
