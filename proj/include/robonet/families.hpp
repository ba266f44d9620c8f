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


#ifndef ROBONET__FAMILIES_HPP_
#define ROBONET__FAMILIES_HPP_

#include "robonet/digraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace robonet
{

enum class FamilyKind { complete, kautz, circulant, simple_loop, double_loop, daisy_chain };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_string(std::string_view name);

struct FamilySpec
{
  FamilyKind kind = FamilyKind::complete;
  std::int32_t n = 0;
  std::int32_t d = 0;
  std::int32_t kappa = 0;
  std::vector<std::int32_t> b_set;
  VertexId root = 1;
};

/// Every ordered pair except self-pairs and pairs entering the root.
Digraph complete_rooted(std::int32_t n, VertexId root = 1);

/// Kautz digraph on d^kappa + d^(kappa-1) vertices: i -> j for
/// j = (-i*d - tau) mod n, tau in 1..d, residue 0 written as n.
/// Throws ParameterOverflow when the vertex or edge count does not fit.
Digraph kautz_rooted(std::int32_t d, std::int32_t kappa, VertexId root = 1);

/// i -> j whenever j - i = b (mod n) for some b in b_set. Throws
/// InvalidConnectionSet unless b_set is nonempty, distinct and within 1..n-1.
Digraph circulant_rooted(std::int32_t n, const std::vector<std::int32_t> & b_set, VertexId root = 1);

/// Circulant shorthands with b_set {1}, {1, n-1} and {1, n-2}.
Digraph preset(FamilyKind kind, std::int32_t n, VertexId root = 1);

Digraph generate(const FamilySpec & spec);

}  // namespace robonet

#endif  // ROBONET__FAMILIES_HPP_
