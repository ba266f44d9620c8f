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


#include "robonet/families.hpp"

#include "robonet/error.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <utility>

namespace robonet
{

namespace
{

constexpr std::array<std::pair<FamilyKind, std::string_view>, 6> kind_names{{
  {FamilyKind::complete, "complete"},
  {FamilyKind::kautz, "kautz"},
  {FamilyKind::circulant, "circulant"},
  {FamilyKind::simple_loop, "simple_loop"},
  {FamilyKind::double_loop, "double_loop"},
  {FamilyKind::daisy_chain, "daisy_chain"},
}};

VertexId residue(std::int64_t x, std::int64_t n)
{
  const auto r = ((x % n) + n) % n;
  return static_cast<VertexId>(r == 0 ? n : r);
}

void check_root(std::int32_t n, VertexId root)
{
  if (root < 1 || root > n) {
    throw Error(ErrorCode::IndexOutOfRange, "root " + std::to_string(root) + " is outside 1.." + std::to_string(n));
  }
}

Digraph rootify(std::int32_t n, VertexId root, EdgeSet edges)
{
  std::erase_if(edges, [root](const Edge & e) { return e.head == root; });
  const VertexId roots[] = {root};
  return Digraph::create(n, roots, edges);
}

}  // namespace

std::string_view to_string(FamilyKind kind)
{
  for (const auto & [k, name] : kind_names) {
    if (k == kind) {
      return name;
    }
  }
  return "unknown";
}

std::optional<FamilyKind> family_kind_from_string(std::string_view name)
{
  for (const auto & [k, label] : kind_names) {
    if (label == name) {
      return k;
    }
  }
  return std::nullopt;
}

Digraph complete_rooted(std::int32_t n, VertexId root)
{
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "complete digraph needs n >= 2");
  }
  check_root(n, root);
  EdgeSet edges;
  for (VertexId i = 1; i <= n; ++i) {
    for (VertexId j = 1; j <= n; ++j) {
      if (i != j) {
        edges.push_back({i, j});
      }
    }
  }
  return rootify(n, root, std::move(edges));
}

Digraph kautz_rooted(std::int32_t d, std::int32_t kappa, VertexId root)
{
  if (d < 2 || kappa < 1) {
    throw Error(ErrorCode::InvalidArgument, "Kautz digraph needs d >= 2 and kappa >= 1");
  }
  constexpr std::int64_t limit = std::numeric_limits<std::int32_t>::max();
  std::int64_t lower = 1;  // d^(kappa-1)
  for (std::int32_t i = 1; i < kappa; ++i) {
    lower *= d;
    if (lower > limit) {
      throw Error(ErrorCode::ParameterOverflow, "d^kappa + d^(kappa-1) does not fit in a vertex index");
    }
  }
  const std::int64_t n = lower * d + lower;
  if (n > limit || n * d > limit) {
    throw Error(ErrorCode::ParameterOverflow, "d^kappa + d^(kappa-1) does not fit in a vertex index");
  }
  check_root(static_cast<std::int32_t>(n), root);
  EdgeSet edges;
  edges.reserve(static_cast<std::size_t>(n * d));
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t tau = 1; tau <= d; ++tau) {
      edges.push_back({static_cast<VertexId>(i), residue(-i * d - tau, n)});
    }
  }
  return rootify(static_cast<std::int32_t>(n), root, std::move(edges));
}

Digraph circulant_rooted(std::int32_t n, const std::vector<std::int32_t> & b_set, VertexId root)
{
  if (n < 2) {
    throw Error(ErrorCode::InvalidConnectionSet, "circulant digraph needs n >= 2");
  }
  if (b_set.empty()) {
    throw Error(ErrorCode::InvalidConnectionSet, "connection set is empty");
  }
  std::set<std::int32_t> seen;
  for (const auto b : b_set) {
    if (b < 1 || b > n - 1) {
      throw Error(ErrorCode::InvalidConnectionSet,
                  "connection " + std::to_string(b) + " is outside 1.." + std::to_string(n - 1));
    }
    if (!seen.insert(b).second) {
      throw Error(ErrorCode::InvalidConnectionSet, "connection " + std::to_string(b) + " is repeated");
    }
  }
  check_root(n, root);
  EdgeSet edges;
  for (VertexId i = 1; i <= n; ++i) {
    for (const auto b : seen) {
      edges.push_back({i, residue(static_cast<std::int64_t>(i) + b, n)});
    }
  }
  return rootify(n, root, std::move(edges));
}

Digraph preset(FamilyKind kind, std::int32_t n, VertexId root)
{
  if (n < 3) {
    throw Error(ErrorCode::InvalidArgument, "loop presets need n >= 3");
  }
  switch (kind) {
    case FamilyKind::simple_loop:
      return circulant_rooted(n, {1}, root);
    case FamilyKind::double_loop:
      return circulant_rooted(n, {1, n - 1}, root);
    case FamilyKind::daisy_chain:
      // n = 3 folds both connections onto b = 1
      return circulant_rooted(n, n == 3 ? std::vector<std::int32_t>{1} : std::vector<std::int32_t>{1, n - 2}, root);
    default:
      throw Error(ErrorCode::InvalidArgument, "not a loop preset: " + std::string(to_string(kind)));
  }
}

Digraph generate(const FamilySpec & spec)
{
  switch (spec.kind) {
    case FamilyKind::complete:
      return complete_rooted(spec.n, spec.root);
    case FamilyKind::kautz:
      return kautz_rooted(spec.d, spec.kappa, spec.root);
    case FamilyKind::circulant:
      return circulant_rooted(spec.n, spec.b_set, spec.root);
    default:
      return preset(spec.kind, spec.n, spec.root);
  }
}

}  // namespace robonet
