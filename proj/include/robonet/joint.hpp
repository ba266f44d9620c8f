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

#ifndef ROBONET__JOINT_HPP_
#define ROBONET__JOINT_HPP_

#include "robonet/digraph.hpp"
#include "robonet/error.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace robonet
{

// Throughout, r counts lost links and s counts lost agents.

/// Joint controllability degree, min(lc, ac).
std::int32_t jc(const Digraph & g);

/// Joint controllability degree computed independently as the agent degree
/// of the edge-duplicate, where only white vertices are failure targets.
std::int32_t jc_via_duplicate(const Digraph & g);

/// Survives every loss of u <= r links and v <= s agents with u + v < r + s.
/// (0, 0) and the r + s = 1 pairs reduce to plain controllability.
/// Throws InstanceTooLarge.
bool is_joint_rs_controllable(
  const Digraph & g, std::int32_t r, std::int32_t s, const Budget & budget = Budget::from_env());

struct RsPair
{
  std::int32_t r = 0;
  std::int32_t s = 0;

  friend auto operator<=>(const RsPair &, const RsPair &) = default;
};

/// Pairs (r, s) for which the digraph is joint (r, s)-controllable, over the
/// box [0..lc] x [0..ac] outside of which no pair can qualify.
struct JointRegion
{
  std::int32_t lc = 0;
  std::int32_t ac = 0;
  std::int32_t jc = 0;
  /// members[r][s]
  std::vector<std::vector<bool>> members;
  /// Maximal members under the componentwise order, ascending.
  std::vector<RsPair> frontier;

  bool contains(std::int32_t r, std::int32_t s) const;
  std::vector<RsPair> member_list() const;
  /// Members above the line r + s = jc.
  std::vector<RsPair> excess() const;
};

/// Throws InstanceTooLarge.
JointRegion joint_region(const Digraph & g, const Budget & budget = Budget::from_env());

/// One link/agent mix of total size jc(g) whose loss breaks controllability,
/// taken from a minimum separator in the edge-duplicate. Among separators
/// the one with fewer agents is preferred. Throws Uncontrollable.
struct AgentLinkWitness
{
  VertexSet agents;
  EdgeSet links;

  std::size_t size() const noexcept { return agents.size() + links.size(); }
};

AgentLinkWitness critical_agent_link_witness(const Digraph & g);

/// Agent set built from an out-cut of some X containing the roots: the tail
/// of each cut edge when it is a follower, otherwise its head. Edges are
/// visited in lexicographic order. Throws NotAnOutCut.
VertexSet routine1(const Digraph & g, const EdgeSet & cut);

/// Link set built from a critical agent-set: for each member (ascending) its
/// first out-edge with rho = 1. Throws NotCriticalAgentSet when `cq` is not a
/// minimum breaking agent set and ConditionUnmet when some member has no such
/// out-edge.
EdgeSet routine2(const Digraph & g, const VertexSet & cq);

struct Classification
{
  bool agent_critical = false;
  /// nullopt when critical agent-set enumeration exceeded the budget.
  std::optional<bool> link_critical;
  std::optional<bool> jointly_critical;
  /// The critical agent-set satisfying the link-critical condition, if any.
  std::optional<VertexSet> link_critical_witness;
};

/// Requires a controllable digraph (throws Uncontrollable).
Classification classify(const Digraph & g, const Budget & budget = Budget::from_env());

struct BoundCheck
{
  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string detail;
};

/// Evaluates the edge-count and region inequalities that apply to g.
std::vector<BoundCheck> check_bounds(
  const Digraph & g, const JointRegion & region, const Classification & classification);

}  // namespace robonet

#endif  // ROBONET__JOINT_HPP_
