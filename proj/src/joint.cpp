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

#include "robonet/joint.hpp"

#include "combinations.hpp"
#include "robonet/connectivity.hpp"
#include "robonet/criticality.hpp"
#include "separators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace robonet
{

namespace
{

// Fewest links whose loss, on top of losing `agents`, breaks controllability.
std::int32_t links_to_break(const Digraph & g, const VertexSet & agents)
{
  if (g.follower_count() > 0 && static_cast<std::int32_t>(agents.size()) == g.follower_count()) {
    return 0;
  }
  return lc(remove_vertices(g, agents));
}

// For each agent-loss size v in [0, max_agents], the fewest links that
// complete a breaking mix. Breaking mixes stay breaking when grown, so a
// loss of u links and v agents can break g iff result[v] <= u.
std::vector<std::int32_t> min_links_by_agent_loss(
  const Digraph & g, std::int32_t max_agents, const Budget & budget)
{
  const auto followers = g.followers();
  const auto f = followers.size();
  std::uint64_t candidates = 0;
  for (std::int32_t v = 0; v <= max_agents; ++v) {
    const auto c = binomial(f, static_cast<std::uint64_t>(v));
    candidates = c > budget.max_candidates ? c : candidates + c;
    if (candidates > budget.max_candidates) {
      throw Error(ErrorCode::InstanceTooLarge, "agent-loss subsets exceed the enumeration budget");
    }
  }
  std::vector<std::int32_t> result;
  for (std::int32_t v = 0; v <= max_agents; ++v) {
    auto best = std::numeric_limits<std::int32_t>::max();
    detail::for_each_combination(f, static_cast<std::size_t>(v), [&](const std::vector<std::size_t> & idx) {
      best = std::min(best, links_to_break(g, detail::pick(followers, idx)));
      return best > 0;
    });
    result.push_back(best);
  }
  return result;
}

std::vector<RsPair> maximal_lesser_pairs(std::int32_t r, std::int32_t s)
{
  std::vector<RsPair> pairs;
  if (r >= 1) {
    pairs.push_back({r - 1, s});
  }
  if (s >= 1) {
    pairs.push_back({r, s - 1});
  }
  return pairs;
}

std::string edge_str(Edge e)
{
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

}  // namespace

std::int32_t jc(const Digraph & g)
{
  return std::min(lc(g), ac(g));
}

std::int32_t jc_via_duplicate(const Digraph & g)
{
  const auto dup = edge_duplicate(g);
  return ac_over(dup.graph, dup.white_followers());
}

bool is_joint_rs_controllable(const Digraph & g, std::int32_t r, std::int32_t s, const Budget & budget)
{
  if (r < 0 || s < 0) {
    throw Error(ErrorCode::InvalidArgument, "r and s must be non-negative");
  }
  if (!survives(g, {}, {})) {
    return false;
  }
  // a breaking mix of (u, v) grows into one of any larger feasible size, so
  // the two maximal pairs, clamped to the available elements, decide it
  for (const auto pair : maximal_lesser_pairs(r, s)) {
    const auto u = std::min(pair.r, g.edge_count());
    const auto v = std::min(pair.s, g.follower_count());
    const auto need = min_links_by_agent_loss(g, v, budget);
    if (need.back() <= u) {
      return false;
    }
  }
  return true;
}

bool JointRegion::contains(std::int32_t r, std::int32_t s) const
{
  if (r < 0 || s < 0 || r >= static_cast<std::int32_t>(members.size())) {
    return false;
  }
  const auto & row = members[r];
  return s < static_cast<std::int32_t>(row.size()) && row[s];
}

std::vector<RsPair> JointRegion::member_list() const
{
  std::vector<RsPair> out;
  for (std::int32_t r = 0; r < static_cast<std::int32_t>(members.size()); ++r) {
    for (std::int32_t s = 0; s < static_cast<std::int32_t>(members[r].size()); ++s) {
      if (members[r][s]) {
        out.push_back({r, s});
      }
    }
  }
  return out;
}

std::vector<RsPair> JointRegion::excess() const
{
  auto out = member_list();
  std::erase_if(out, [this](const RsPair & p) { return p.r + p.s <= jc; });
  return out;
}

JointRegion joint_region(const Digraph & g, const Budget & budget)
{
  JointRegion region;
  if (g.follower_count() == 0 || !is_controllable(g)) {
    region.members = {{false}};
    return region;
  }
  region.lc = lc(g);
  region.ac = ac(g);
  region.jc = std::min(region.lc, region.ac);
  const auto need = min_links_by_agent_loss(g, region.ac, budget);
  region.members.assign(
    static_cast<std::size_t>(region.lc) + 1, std::vector<bool>(static_cast<std::size_t>(region.ac) + 1, false));
  for (std::int32_t r = 0; r <= region.lc; ++r) {
    for (std::int32_t s = 0; s <= region.ac; ++s) {
      bool member = true;
      for (const auto pair : maximal_lesser_pairs(r, s)) {
        member = member && need[pair.s] > pair.r;
      }
      region.members[r][s] = member;
    }
  }
  for (const auto & p : region.member_list()) {
    if (!region.contains(p.r + 1, p.s) && !region.contains(p.r, p.s + 1)) {
      region.frontier.push_back(p);
    }
  }
  return region;
}

AgentLinkWitness critical_agent_link_witness(const Digraph & g)
{
  if (g.follower_count() == 0 || !is_controllable(g)) {
    throw Error(ErrorCode::Uncontrollable, "no critical agent-link set: the digraph is not controllable");
  }
  const auto dup = edge_duplicate(g);
  const auto & h = dup.graph;
  // weight K per element plus 1 per agent: minimum size first, then fewest agents
  const detail::FlowNetwork::Capacity unit = h.capacity() + 1;
  std::vector<detail::FlowNetwork::Capacity> weight(static_cast<std::size_t>(h.capacity()) + 1, unit);
  for (const auto v : dup.white_followers()) {
    weight[v] = unit + 1;
  }
  using Key = std::tuple<std::size_t, std::size_t, VertexSet, EdgeSet>;
  std::optional<Key> best;
  const auto consider = [&](VertexSet agents, EdgeSet links) {
    Key key{agents.size() + links.size(), agents.size(), std::move(agents), std::move(links)};
    if (!best || key < *best) {
      best = std::move(key);
    }
  };
  consider(g.followers(), {});
  for (const auto t : dup.white_followers()) {
    const auto sep = detail::min_vertex_separator(h, t, weight);
    if (!sep) {
      continue;
    }
    VertexSet agents;
    EdgeSet links;
    for (const auto v : sep->vertices) {
      if (dup.is_black(v)) {
        links.push_back(dup.edge_of_black[static_cast<std::size_t>(v - g.capacity() - 1)]);
      } else {
        agents.push_back(v);
      }
    }
    std::sort(links.begin(), links.end());
    consider(std::move(agents), std::move(links));
  }
  AgentLinkWitness witness{std::get<2>(*best), std::get<3>(*best)};
  if (witness.size() != static_cast<std::size_t>(jc(g)) || survives(g, witness.links, witness.agents)) {
    throw std::logic_error("agent-link witness replay failed");
  }
  for (std::size_t skip = 0; skip < witness.size(); ++skip) {
    auto agents = witness.agents;
    auto links = witness.links;
    if (skip < agents.size()) {
      agents.erase(agents.begin() + static_cast<std::ptrdiff_t>(skip));
    } else {
      links.erase(links.begin() + static_cast<std::ptrdiff_t>(skip - agents.size()));
    }
    if (!survives(g, links, agents)) {
      throw std::logic_error("agent-link witness is not minimal");
    }
  }
  return witness;
}

VertexSet routine1(const Digraph & g, const EdgeSet & cut)
{
  EdgeSet sorted_cut = cut;
  std::sort(sorted_cut.begin(), sorted_cut.end());
  sorted_cut.erase(std::unique(sorted_cut.begin(), sorted_cut.end()), sorted_cut.end());
  for (const auto & e : sorted_cut) {
    if (!g.has_edge(e)) {
      throw Error(ErrorCode::NotAnOutCut, "edge " + edge_str(e) + " is not in the digraph");
    }
  }
  // smallest X containing the roots and the cut tails that no non-cut edge leaves
  std::vector<bool> in_x(static_cast<std::size_t>(g.capacity()) + 1, false);
  std::vector<VertexId> stack(g.roots().begin(), g.roots().end());
  for (const auto & e : sorted_cut) {
    stack.push_back(e.tail);
  }
  for (const auto v : stack) {
    in_x[v] = true;
  }
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto w : g.out_neighbors(v)) {
      if (!in_x[w] && !std::binary_search(sorted_cut.begin(), sorted_cut.end(), Edge{v, w})) {
        in_x[w] = true;
        stack.push_back(w);
      }
    }
  }
  VertexSet x;
  for (const auto v : g.vertices()) {
    if (in_x[v]) {
      x.push_back(v);
    }
  }
  if (out_cut(g, x).members != sorted_cut || static_cast<std::int32_t>(x.size()) == g.vertex_count()) {
    throw Error(ErrorCode::NotAnOutCut, "edge set is not the out-cut of a proper vertex set containing the roots");
  }

  std::set<VertexId> agents;
  for (const auto & e : sorted_cut) {
    agents.insert(g.is_root(e.tail) ? e.head : e.tail);
  }
  return {agents.begin(), agents.end()};
}

EdgeSet routine2(const Digraph & g, const VertexSet & cq)
{
  VertexSet members = cq;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto valid = g.follower_count() > 0 && is_controllable(g) &&
    std::all_of(members.begin(), members.end(), [&](VertexId v) { return g.is_follower(v); }) &&
    static_cast<std::int32_t>(members.size()) == ac(g) && !survives(g, {}, members);
  if (!valid) {
    throw Error(ErrorCode::NotCriticalAgentSet, "vertex set is not a critical agent-set");
  }
  const auto base = ac(g);
  EdgeSet picked;
  for (const auto v : members) {
    bool found = false;
    for (const auto & e : g.out_edges(v)) {
      if (!found && base - ac(remove_edges(g, std::span<const Edge>(&e, 1))) == 1) {
        picked.push_back(e);
        found = true;
      }
    }
    if (!found) {
      throw Error(
        ErrorCode::ConditionUnmet, "agent " + std::to_string(v) + " has no out-edge with agent controllability index 1");
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

Classification classify(const Digraph & g, const Budget & budget)
{
  if (g.follower_count() == 0 || !is_controllable(g)) {
    throw Error(ErrorCode::Uncontrollable, "classification needs a controllable digraph with followers");
  }
  const auto base = ac(g);
  std::map<Edge, std::int32_t> rho_cache;
  const auto rho_of = [&](const Edge & e) {
    auto it = rho_cache.find(e);
    if (it == rho_cache.end()) {
      it = rho_cache.emplace(e, base - ac(remove_edges(g, std::span<const Edge>(&e, 1)))).first;
    }
    return it->second;
  };

  Classification result;
  const auto root_cut = out_cut(g, g.roots()).members;
  result.agent_critical = std::all_of(root_cut.begin(), root_cut.end(), [&](const Edge & e) { return rho_of(e) == 1; });

  try {
    const auto sets = enumerate_critical_sets(g, SetKind::agent, std::numeric_limits<std::size_t>::max(), budget);
    result.link_critical = false;
    for (const auto & set : sets.sets) {
      const bool ok = std::all_of(set.agents.begin(), set.agents.end(), [&](VertexId v) {
        const auto out = g.out_edges(v);
        return std::any_of(out.begin(), out.end(), [&](const Edge & e) { return rho_of(e) == 1; });
      });
      if (ok) {
        result.link_critical = true;
        result.link_critical_witness = set.agents;
        break;
      }
    }
  } catch (const Error & err) {
    if (err.code() != ErrorCode::InstanceTooLarge) {
      throw;
    }
  }
  if (!result.agent_critical) {
    result.jointly_critical = false;
  } else if (result.link_critical) {
    result.jointly_critical = *result.link_critical;
  }
  return result;
}

std::vector<BoundCheck> check_bounds(
  const Digraph & g, const JointRegion & region, const Classification & classification)
{
  const std::int64_t vertices = g.vertex_count();
  const std::int64_t edges = g.edge_count();
  const std::int64_t lc_value = region.lc;
  const std::int64_t ac_value = region.ac;
  const std::int64_t jc_value = region.jc;
  const auto edges_str = std::to_string(edges);
  std::vector<BoundCheck> checks;

  const auto add = [&](std::string name, bool applicable, bool holds, std::string detail) {
    checks.push_back({std::move(name), applicable, !applicable || holds, std::move(detail)});
  };

  {
    const auto bound = (vertices - 1) * lc_value;
    add("edges_vs_link_degree", true, edges >= bound, "|E|=" + edges_str + " >= (|V|-1)lc=" + std::to_string(bound));
  }
  {
    const auto bound = vertices + ac_value - 2;
    add("edges_vs_agent_degree", true, edges >= bound, "|E|=" + edges_str + " >= |V|+ac-2=" + std::to_string(bound));
  }
  {
    const auto bound = std::max((vertices - 1) * jc_value, vertices + jc_value - 2);
    add("edges_vs_joint_degree", true, edges >= bound,
        "|E|=" + edges_str + " >= max((|V|-1)jc, |V|+jc-2)=" + std::to_string(bound));
  }

  const auto members = region.member_list();
  const bool agent_critical = classification.agent_critical;
  const bool link_critical = classification.link_critical.value_or(false);
  {
    const auto cap = std::max(lc_value, ac_value);
    std::string worst;
    bool holds = true;
    for (const auto & p : members) {
      if (p.r + p.s > cap) {
        holds = false;
        worst = "(" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
        break;
      }
    }
    add("region_sum_vs_max_degree", agent_critical || link_critical, holds,
        holds ? "r+s <= max(lc,ac)=" + std::to_string(cap) : "pair " + worst + " exceeds max(lc,ac)");
  }
  {
    bool holds = true;
    for (const auto & p : members) {
      holds = holds && edges >= (vertices - 1) * (p.r + p.s);
    }
    add("agent_critical_edges_vs_region", agent_critical, holds, "|E| >= (|V|-1)(r+s) for every member");
  }
  {
    bool holds = true;
    for (const auto & p : members) {
      holds = holds && edges >= vertices + p.r + p.s - 2;
    }
    add("link_critical_edges_vs_region", link_critical, holds, "|E| >= |V|+r+s-2 for every member");
  }
  {
    bool holds = region.excess().empty();
    for (std::int32_t r = 0; r <= jc_value; ++r) {
      holds = holds && region.contains(r, static_cast<std::int32_t>(jc_value) - r);
    }
    add("jointly_critical_region", classification.jointly_critical.value_or(false), holds,
        "members are exactly r+s <= jc=" + std::to_string(jc_value));
  }
  {
    bool holds = true;
    for (const auto & p : members) {
      holds = holds && (p.r != region.lc || p.s == 0) && (p.s != region.ac || p.r == 0);
    }
    add("region_degree_edges", is_controllable(g) && g.follower_count() > 0, holds,
        "r = lc forces s = 0 and s = ac forces r = 0");
  }
  return checks;
}

}  // namespace robonet
