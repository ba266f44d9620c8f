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

#ifndef ROBONET__DIGRAPH_HPP_
#define ROBONET__DIGRAPH_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace robonet
{

/// 1-based vertex label, as in v_1..v_n.
using VertexId = std::int32_t;

struct Edge
{
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

using EdgeSet = std::vector<Edge>;
using VertexSet = std::vector<VertexId>;

/// Rooted information-flow digraph.
///
/// Immutable once built. Vertices are labelled 1..capacity(); removing
/// vertices keeps the labels of the survivors, so a digraph may have gaps.
/// Roots never have incoming edges and self-loops are never stored (the
/// follower self-loops of the agent model are implicit).
class Digraph
{
public:
  /// Empty digraph with no vertices.
  Digraph() = default;

  /// Validates and builds a digraph with every vertex 1..n present.
  /// Duplicate edges are merged. Throws Error on RootInEdgeHead, SelfLoop,
  /// IndexOutOfRange or EmptyRootSet.
  static Digraph create(VertexId n, std::span<const VertexId> roots, std::span<const Edge> edges);

  VertexId capacity() const noexcept { return n_; }
  std::int32_t vertex_count() const noexcept { return present_count_; }
  std::int32_t follower_count() const noexcept
  {
    return present_count_ - static_cast<std::int32_t>(roots_.size());
  }
  std::int32_t edge_count() const noexcept { return static_cast<std::int32_t>(edges_.size()); }

  bool contains(VertexId v) const noexcept { return v >= 1 && v <= n_ && present_[v]; }
  bool is_root(VertexId v) const noexcept { return v >= 1 && v <= n_ && root_[v]; }
  bool is_follower(VertexId v) const noexcept { return contains(v) && !root_[v]; }
  bool has_edge(Edge e) const;

  std::span<const VertexId> roots() const noexcept { return roots_; }
  /// Ascending present vertices.
  VertexSet vertices() const;
  /// Ascending present non-root vertices.
  VertexSet followers() const;
  /// Lexicographic by (tail, head).
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }
  EdgeSet out_edges(VertexId v) const;
  EdgeSet in_edges(VertexId v) const;

  /// True when some edge leaves a root and enters v.
  bool directly_rooted(VertexId v) const;

  friend bool operator==(const Digraph & a, const Digraph & b)
  {
    return a.n_ == b.n_ && a.present_ == b.present_ && a.roots_ == b.roots_ && a.edges_ == b.edges_;
  }

private:
  friend Digraph remove_edges(const Digraph &, std::span<const Edge>);
  friend Digraph remove_vertices(const Digraph &, std::span<const VertexId>);

  void index();

  VertexId n_ = 0;
  std::int32_t present_count_ = 0;
  std::vector<bool> present_;  // indexed 0..n, slot 0 unused
  std::vector<bool> root_;
  VertexSet roots_;
  EdgeSet edges_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

inline Digraph new_digraph(VertexId n, std::span<const VertexId> roots, std::span<const Edge> edges)
{
  return Digraph::create(n, roots, edges);
}

/// Every present follower is reachable from the root-set. A digraph with no
/// followers is controllable.
bool is_controllable(const Digraph & g);

/// Vertices reachable from the root-set, roots included, as a 0..n mask.
std::vector<bool> reachable_from_roots(const Digraph & g);

/// Throws UnknownEdge if some member of `loss` is not an edge of g.
Digraph remove_edges(const Digraph & g, std::span<const Edge> loss);

/// Drops the vertices and their incident edges; survivors keep their labels.
/// Throws RootRemoval for a root and IndexOutOfRange for an absent vertex.
Digraph remove_vertices(const Digraph & g, std::span<const VertexId> loss);

/// Failure predicate shared by every degree and region computation: the
/// network survives losing `links` and `agents` when at least one follower
/// is left and every remaining follower is still reachable from the roots.
/// Losing every follower counts as a failure. A digraph that had no
/// followers to begin with always survives.
bool survives(const Digraph & g, std::span<const Edge> links, std::span<const VertexId> agents);

enum class CutSide { out, in };

struct Cut
{
  EdgeSet members;
  CutSide side = CutSide::out;

  std::int32_t degree() const noexcept { return static_cast<std::int32_t>(members.size()); }
};

/// Edges with tail in x and head outside x.
Cut out_cut(const Digraph & g, std::span<const VertexId> x);
/// Edges with head in x and tail outside x.
Cut in_cut(const Digraph & g, std::span<const VertexId> x);

/// Edge-duplicate: every edge (t, h) becomes t -> b -> h through a fresh
/// black vertex b. White vertices keep labels 1..n; black vertices are
/// numbered n+1.. in lexicographic edge order.
struct EdgeDuplicate
{
  Digraph graph;
  std::vector<VertexId> white_of;    // index v -> white vertex (== v), 0 if absent
  std::map<Edge, VertexId> black_of;
  std::vector<Edge> edge_of_black;   // black vertex - (n + 1) -> original edge

  bool is_black(VertexId v) const noexcept { return v > static_cast<VertexId>(white_of.size()) - 1; }
  /// The white followers, i.e. the agents of the original digraph.
  VertexSet white_followers() const;
};

EdgeDuplicate edge_duplicate(const Digraph & g);

}  // namespace robonet

#endif  // ROBONET__DIGRAPH_HPP_
