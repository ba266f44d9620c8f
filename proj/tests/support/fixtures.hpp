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


#ifndef ROBONET_TESTS__FIXTURES_HPP_
#define ROBONET_TESTS__FIXTURES_HPP_

#include "robonet/digraph.hpp"
#include "robonet/error.hpp"
#include "robonet/families.hpp"
#include "robonet/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

namespace robonet::test
{

inline Digraph make(VertexId n, std::initializer_list<VertexId> roots, std::initializer_list<Edge> edges)
{
  const VertexSet r(roots);
  const EdgeSet e(edges);
  return Digraph::create(n, r, e);
}

/// 1 -> 2 -> 3
inline Digraph path3()
{
  return make(3, {1}, {{1, 2}, {2, 3}});
}

/// Root 1 feeding every other vertex directly.
inline Digraph star(VertexId n)
{
  EdgeSet edges;
  for (VertexId v = 2; v <= n; ++v) {
    edges.push_back({1, v});
  }
  const VertexId roots[] = {1};
  return Digraph::create(n, roots, edges);
}

inline Digraph g1() { return circulant_rooted(5, {1}); }
inline Digraph g2() { return circulant_rooted(5, {1, 4}); }
inline Digraph g3() { return circulant_rooted(5, {1, 3}); }
inline Digraph g4() { return circulant_rooted(6, {2, 3, 5}); }

/// Seeded instances with at most 8 vertices, 16 edges and one or two roots.
/// Edge counts are drawn from [n - 1, min(16, allowed)] so most instances
/// have a chance to be controllable.
inline std::vector<Digraph> random_suite(std::size_t count, std::uint64_t seed = 20240601)
{
  std::mt19937_64 rng(seed);
  std::vector<Digraph> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto n = 2 + static_cast<std::int32_t>(rng() % 7);
    const auto roots = n >= 3 ? 1 + static_cast<std::int32_t>(rng() % 2) : 1;
    const auto allowed = (n - roots) * (n - 1);
    const auto hi = std::min(16, allowed);
    const auto lo = std::min(n - 1, hi);
    const auto m = lo + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    out.push_back(random_digraph(n, m, roots, rng()));
  }
  return out;
}

/// Error code thrown by `f`, or nullopt when it returns normally.
template <typename F>
std::optional<ErrorCode> error_of(F && f)
{
  try {
    f();
  } catch (const Error & e) {
    return e.code();
  }
  return std::nullopt;
}

inline bool analyzable(const Digraph & g)
{
  return g.follower_count() > 0 && is_controllable(g);
}

}  // namespace robonet::test

#endif  // ROBONET_TESTS__FIXTURES_HPP_
