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

#ifndef ROBONET__SEPARATORS_HPP_
#define ROBONET__SEPARATORS_HPP_

#include "flow_network.hpp"
#include "robonet/digraph.hpp"

#include <optional>
#include <span>

namespace robonet::detail
{

struct Separator
{
  FlowNetwork::Capacity weight = 0;
  VertexSet vertices;
};

/// Minimum-weight set of followers other than `target` separating it from
/// the roots. `weight` is indexed by vertex; empty means unit weights.
/// nullopt when a root feeds `target` directly.
std::optional<Separator> min_vertex_separator(
  const Digraph & g, VertexId target, std::span<const FlowNetwork::Capacity> weight = {});

}  // namespace robonet::detail

#endif  // ROBONET__SEPARATORS_HPP_
