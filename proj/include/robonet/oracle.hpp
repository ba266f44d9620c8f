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


#ifndef ROBONET__ORACLE_HPP_
#define ROBONET__ORACLE_HPP_

#include "robonet/digraph.hpp"
#include "robonet/joint.hpp"

#include <cstdint>

namespace robonet
{

/// Limits for the exhaustive reference searches. Exceeding any of them
/// throws InstanceTooLarge.
struct OracleBudget
{
  std::uint64_t max_subset_candidates = 1'000'000;
  std::int32_t max_vertices = 10;
  std::int32_t max_edges = 20;
};

/// Smallest number of links whose loss breaks controllability; 0 when
/// already uncontrollable or follower-free.
std::int32_t oracle_lc(const Digraph & g, const OracleBudget & budget = {});

/// Smallest number of followers whose loss breaks controllability, where
/// losing every follower counts as breaking it.
std::int32_t oracle_ac(const Digraph & g, const OracleBudget & budget = {});

/// Smallest mixed set of links and followers whose loss breaks controllability.
std::int32_t oracle_jc(const Digraph & g, const OracleBudget & budget = {});

/// Agent degree of an edge-duplicate where only white vertices count as
/// agents that must stay reached. Black vertices may still be removed.
std::int32_t oracle_ac(const EdgeDuplicate & dup, const OracleBudget & budget = {});

/// Enumerates every (u, v) with u <= r, v <= s, u + v < r + s and every
/// matching pair of subsets. (0, 0) reduces to plain controllability.
bool oracle_joint_rs(const Digraph & g, std::int32_t r, std::int32_t s, const OracleBudget & budget = {});

/// Every cell of [0, lc] x [0, ac] evaluated with oracle_joint_rs.
JointRegion oracle_region(const Digraph & g, const OracleBudget & budget = {});

/// Uniform random digraph with `root_count` roots and `edge_count` edges.
///
/// Draws from std::mt19937_64(seed). Bounded integers use rejection sampling
/// on the raw 64-bit output, so the sequence is identical on every platform.
/// Roots are the first `root_count` entries of a partial Fisher-Yates shuffle
/// of 1..n, then sorted. Edges are the first `edge_count` entries of a partial
/// Fisher-Yates shuffle of the allowed pairs (tail != head, head not a root)
/// listed lexicographically. Throws Unsatisfiable when the counts cannot be met.
Digraph random_digraph(std::int32_t n, std::int32_t edge_count, std::int32_t root_count, std::uint64_t seed);

}  // namespace robonet

#endif  // ROBONET__ORACLE_HPP_
