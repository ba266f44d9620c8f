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

#include "robonet/criticality.hpp"

#include "combinations.hpp"
#include "parallel.hpp"
#include "robonet/connectivity.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace robonet
{

namespace
{

std::string edge_str(Edge e)
{
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

void require_edge(const Digraph & g, Edge e)
{
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::UnknownEdge, "edge " + edge_str(e) + " is not in the digraph");
  }
}

void require_follower(const Digraph & g, VertexId v)
{
  if (g.is_root(v)) {
    throw Error(ErrorCode::RootQueried, "vertex " + std::to_string(v) + " is a root");
  }
  if (!g.contains(v)) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " is not in the digraph");
  }
}

Digraph without_edge(const Digraph & g, Edge e)
{
  const Edge loss[] = {e};
  return remove_edges(g, loss);
}

Digraph without_vertex(const Digraph & g, VertexId v)
{
  const VertexId loss[] = {v};
  return remove_vertices(g, loss);
}

Digraph without_out_edges(const Digraph & g, VertexId v)
{
  return remove_edges(g, g.out_edges(v));
}

// Precomputed baseline shared by the per-element indices.
struct Baseline
{
  explicit Baseline(const Digraph & graph)
  : g(graph), controllable(is_controllable(graph))
  {
    if (controllable) {
      link_degree = lc(graph);
      agent_degree = ac(graph);
    }
  }

  bool link_critical(Edge e) const
  {
    return !controllable || lc(without_edge(g, e)) == link_degree - 1;
  }

  std::int32_t critical_links() const
  {
    if (!controllable) {
      return g.edge_count();
    }
    if (!cached_critical) {
      std::int32_t count = 0;
      for (const auto & e : g.edges()) {
        count += link_critical(e) ? 1 : 0;
      }
      cached_critical = count;
    }
    return *cached_critical;
  }

  const Digraph & g;
  bool controllable;
  std::int32_t link_degree = 0;
  std::int32_t agent_degree = 0;
  mutable std::optional<std::int32_t> cached_critical;
};

std::int32_t edge_link_ctrl_index(const Baseline & base, Edge e)
{
  return Baseline(without_edge(base.g, e)).critical_links() - base.critical_links();
}

AgentLinkIndices vertex_link_indices(const Baseline & base, VertexId v)
{
  AgentLinkIndices out;
  EdgeSet uncritical;
  for (const auto & e : base.g.out_edges(v)) {
    if (base.link_critical(e)) {
      ++out.critical_link_index;
    } else {
      uncritical.push_back(e);
    }
  }
  if (!uncritical.empty()) {
    const auto reduced = remove_edges(base.g, uncritical);
    out.uncritical_link_index = Baseline(reduced).critical_links() - base.critical_links();
  }
  return out;
}

}  // namespace

bool is_link_critical(const Digraph & g, Edge e)
{
  require_edge(g, e);
  return Baseline(g).link_critical(e);
}

bool is_agent_critical(const Digraph & g, VertexId v)
{
  require_follower(g, v);
  if (!is_controllable(g)) {
    return true;
  }
  return ac(without_vertex(g, v)) == ac(g) - 1;
}

std::int32_t critical_link_count(const Digraph & g)
{
  return Baseline(g).critical_links();
}

std::optional<std::int32_t> rho(const Digraph & g, Edge e)
{
  require_edge(g, e);
  if (!is_controllable(g)) {
    return std::nullopt;
  }
  return ac(g) - ac(without_edge(g, e));
}

std::optional<std::int32_t> delta(const Digraph & g, VertexId v)
{
  require_follower(g, v);
  if (!is_controllable(g)) {
    return std::nullopt;
  }
  return ac(g) - ac(without_out_edges(g, v));
}

std::optional<std::int32_t> theta(const Digraph & g, VertexId v)
{
  require_follower(g, v);
  if (!is_controllable(g)) {
    return std::nullopt;
  }
  return lc(g) - lc(without_out_edges(g, v));
}

std::optional<std::int32_t> link_controllability_index(const Digraph & g, Edge e)
{
  require_edge(g, e);
  const Baseline base(g);
  if (!base.controllable) {
    return std::nullopt;
  }
  if (base.link_critical(e)) {
    throw Error(ErrorCode::EdgeIsCritical, "edge " + edge_str(e) + " is critical; the index covers uncritical links");
  }
  return edge_link_ctrl_index(base, e);
}

std::optional<AgentLinkIndices> agent_link_indices(const Digraph & g, VertexId v)
{
  require_follower(g, v);
  const Baseline base(g);
  if (!base.controllable) {
    return std::nullopt;
  }
  return vertex_link_indices(base, v);
}

CriticalSetList enumerate_critical_sets(
  const Digraph & g, SetKind kind, std::size_t cap, const Budget & budget)
{
  if (g.follower_count() == 0 || !is_controllable(g)) {
    throw Error(ErrorCode::Uncontrollable, "critical sets are defined for controllable digraphs");
  }
  CriticalSetList result;
  const auto accept = [&](WitnessSet set) {
    if (result.sets.size() == cap) {
      result.truncated = true;
      return false;
    }
    result.sets.push_back(std::move(set));
    return true;
  };

  if (kind == SetKind::link) {
    const auto p = static_cast<std::size_t>(lc(g));
    const EdgeSet edges(g.edges().begin(), g.edges().end());
    if (binomial(edges.size(), p) > budget.max_candidates) {
      throw Error(ErrorCode::InstanceTooLarge, "C(" + std::to_string(edges.size()) + "," + std::to_string(p) +
                  ") link subsets exceed the enumeration budget");
    }
    detail::for_each_combination(edges.size(), p, [&](const std::vector<std::size_t> & idx) {
      auto links = detail::pick(edges, idx);
      if (survives(g, links, {})) {
        return true;
      }
      for (std::size_t skip = 0; skip < links.size(); ++skip) {
        auto subset = links;
        subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(skip));
        if (!survives(g, subset, {})) {
          return true;
        }
      }
      return accept({SetKind::link, std::move(links), {}});
    });
    return result;
  }

  const auto q = static_cast<std::size_t>(ac(g));
  const auto followers = g.followers();
  if (q == followers.size()) {
    // every follower is fed by a root: the only critical agent-set is all of them
    accept({SetKind::agent, {}, followers});
    return result;
  }
  if (binomial(followers.size(), q) > budget.max_candidates) {
    throw Error(ErrorCode::InstanceTooLarge, "C(" + std::to_string(followers.size()) + "," + std::to_string(q) +
                ") agent subsets exceed the enumeration budget");
  }
  detail::for_each_combination(followers.size(), q, [&](const std::vector<std::size_t> & idx) {
    auto agents = detail::pick(followers, idx);
    if (survives(g, {}, agents)) {
      return true;
    }
    for (std::size_t skip = 0; skip < agents.size(); ++skip) {
      auto subset = agents;
      subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(skip));
      if (!survives(g, {}, subset)) {
        return true;
      }
    }
    return accept({SetKind::agent, {}, std::move(agents)});
  });
  return result;
}

IndexTable compute_indices(const Digraph & g, unsigned workers)
{
  const Baseline base(g);
  base.critical_links();
  IndexTable table;
  const auto followers = g.followers();
  table.edges.resize(g.edges().size());
  table.vertices.resize(followers.size());

  detail::parallel_for(table.edges.size() + table.vertices.size(), workers, [&](std::size_t task) {
    if (task < table.edges.size()) {
      auto & rec = table.edges[task];
      rec.edge = g.edges()[task];
      if (!base.controllable) {
        return;
      }
      rec.critical = base.link_critical(rec.edge);
      rec.rho = base.agent_degree - ac(without_edge(g, rec.edge));
      if (!rec.critical) {
        rec.link_ctrl_index = edge_link_ctrl_index(base, rec.edge);
      }
      return;
    }
    auto & rec = table.vertices[task - table.edges.size()];
    rec.vertex = followers[task - table.edges.size()];
    if (!base.controllable) {
      return;
    }
    rec.critical = ac(without_vertex(g, rec.vertex)) == base.agent_degree - 1;
    const auto stripped = without_out_edges(g, rec.vertex);
    rec.delta = base.agent_degree - ac(stripped);
    rec.theta = base.link_degree - lc(stripped);
    const auto link_indices = vertex_link_indices(base, rec.vertex);
    rec.critical_link_index = link_indices.critical_link_index;
    rec.uncritical_link_index = link_indices.uncritical_link_index;
  });
  return table;
}

VertexSet rank_agents(const IndexTable & table)
{
  std::vector<const VertexIndexRecord *> order;
  for (const auto & rec : table.vertices) {
    if (!rec.delta) {
      return {};
    }
    order.push_back(&rec);
  }
  std::sort(order.begin(), order.end(), [](const VertexIndexRecord * a, const VertexIndexRecord * b) {
    const auto key = [](const VertexIndexRecord & r) {
      return std::make_tuple(-*r.delta, -*r.theta, -*r.critical_link_index, -*r.uncritical_link_index, r.vertex);
    };
    return key(*a) < key(*b);
  });
  VertexSet ranked;
  for (const auto * rec : order) {
    ranked.push_back(rec->vertex);
  }
  return ranked;
}

VertexSet rank_agents(const Digraph & g)
{
  return rank_agents(compute_indices(g));
}

}  // namespace robonet
