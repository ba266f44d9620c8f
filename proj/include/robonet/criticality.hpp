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

#ifndef ROBONET__CRITICALITY_HPP_
#define ROBONET__CRITICALITY_HPP_

#include "robonet/digraph.hpp"
#include "robonet/error.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace robonet
{

// Every index below is measured against a controllable baseline. On an
// uncontrollable digraph every element is critical and the numeric indices
// are std::nullopt ("undefined").

/// A link is critical iff removing it lowers lc by one: a (p-1)-link breaking
/// set of g - e together with e is a p-link breaking set of g and vice versa.
bool is_link_critical(const Digraph & g, Edge e);

/// Agent analogue of is_link_critical, via ac(g - v) == ac(g) - 1.
/// Throws RootQueried.
bool is_agent_critical(const Digraph & g, VertexId v);

/// Number of critical links (all of them when g is uncontrollable).
std::int32_t critical_link_count(const Digraph & g);

/// ac(g) - ac(g - e).
std::optional<std::int32_t> rho(const Digraph & g, Edge e);

/// ac(g) - ac(g'), where g' drops every out-edge of v. Throws RootQueried.
std::optional<std::int32_t> delta(const Digraph & g, VertexId v);

/// lc(g) - lc(g'), where g' drops every out-edge of v. Throws RootQueried.
std::optional<std::int32_t> theta(const Digraph & g, VertexId v);

/// Growth in the number of critical links after losing the uncritical link
/// e. Throws EdgeIsCritical.
std::optional<std::int32_t> link_controllability_index(const Digraph & g, Edge e);

struct AgentLinkIndices
{
  /// Critical links among the out-edges of the agent.
  std::int32_t critical_link_index = 0;
  /// Growth in the critical-link count once its uncritical out-edges are lost.
  std::int32_t uncritical_link_index = 0;
};

std::optional<AgentLinkIndices> agent_link_indices(const Digraph & g, VertexId v);

enum class SetKind { link, agent };

struct WitnessSet
{
  SetKind kind = SetKind::link;
  EdgeSet links;
  VertexSet agents;

  friend bool operator==(const WitnessSet &, const WitnessSet &) = default;
};

struct CriticalSetList
{
  std::vector<WitnessSet> sets;
  bool truncated = false;
};

/// Every minimum breaking set of the given kind, in lexicographic order, up
/// to `cap` sets. Throws InstanceTooLarge when the candidate count exceeds
/// the budget and Uncontrollable on an uncontrollable digraph.
CriticalSetList enumerate_critical_sets(
  const Digraph & g, SetKind kind, std::size_t cap, const Budget & budget = Budget::from_env());

struct EdgeIndexRecord
{
  Edge edge;
  bool critical = true;
  std::optional<std::int32_t> rho;
  std::optional<std::int32_t> link_ctrl_index;  // uncritical links only
};

struct VertexIndexRecord
{
  VertexId vertex = 0;
  bool critical = true;
  std::optional<std::int32_t> delta;
  std::optional<std::int32_t> theta;
  std::optional<std::int32_t> critical_link_index;
  std::optional<std::int32_t> uncritical_link_index;
};

struct IndexTable
{
  std::vector<EdgeIndexRecord> edges;
  std::vector<VertexIndexRecord> vertices;
};

/// All per-element records. Work is spread over `workers` threads; the
/// result does not depend on the worker count.
IndexTable compute_indices(const Digraph & g, unsigned workers = 1);

/// Followers ordered by (delta, theta, critical link index, uncritical link
/// index) descending, then by label. Empty for an uncontrollable digraph.
VertexSet rank_agents(const Digraph & g);
VertexSet rank_agents(const IndexTable & table);

}  // namespace robonet

#endif  // ROBONET__CRITICALITY_HPP_
