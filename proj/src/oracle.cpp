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


#include "robonet/oracle.hpp"

#include "robonet/error.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace robonet
{

namespace
{

// Removal candidates of one search. Each element is either a link or a vertex.
struct Element
{
  bool is_link = false;
  Edge link;
  VertexId vertex = 0;
};

// Reference failure predicate on an explicit adjacency. `must_reach` lists the
// vertices that count as agents. Losing all of them counts as failure.
class Failure
{
public:
  Failure(const Digraph & g, VertexSet must_reach) : g_(g), must_reach_(std::move(must_reach)) {}

  bool breaks(const std::vector<Element> & loss) const
  {
    const auto n = static_cast<std::size_t>(g_.capacity());
    std::vector<bool> gone(n + 1, false);
    std::vector<Edge> cut;
    for (const auto & el : loss) {
      if (el.is_link) {
        cut.push_back(el.link);
      } else {
        gone[el.vertex] = true;
      }
    }
    std::vector<bool> seen(n + 1, false);
    std::vector<VertexId> queue;
    for (const auto r : g_.roots()) {
      seen[r] = true;
      queue.push_back(r);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto v = queue[i];
      for (const auto w : g_.out_neighbors(v)) {
        if (seen[w] || gone[w] || std::find(cut.begin(), cut.end(), Edge{v, w}) != cut.end()) {
          continue;
        }
        seen[w] = true;
        queue.push_back(w);
      }
    }
    bool any_left = false;
    for (const auto v : must_reach_) {
      if (gone[v]) {
        continue;
      }
      any_left = true;
      if (!seen[v]) {
        return true;
      }
    }
    return !any_left;
  }

private:
  const Digraph & g_;
  VertexSet must_reach_;
};

std::uint64_t choose(std::uint64_t n, std::uint64_t k)
{
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const auto top = n - k + i;
    if (c > UINT64_MAX / top) {
      return UINT64_MAX;
    }
    c = c * top / i;
  }
  return c;
}

class Counter
{
public:
  explicit Counter(std::uint64_t limit) : limit_(limit) {}

  // Throws InstanceTooLarge once the running total would pass the limit.

  void charge(std::uint64_t amount)
  {
    if (amount > limit_ - spent_) {
      throw Error(ErrorCode::InstanceTooLarge, "oracle candidate budget of " + std::to_string(limit_) + " exceeded");
    }
    spent_ += amount;
  }

private:
  std::uint64_t limit_;
  std::uint64_t spent_ = 0;
};

// Visits every k-subset of `pool` as index vectors in combinadic order. Stops
// when `visit` returns true and reports whether it did.
bool any_subset(std::size_t size, std::size_t k, const std::function<bool(const std::vector<std::size_t> &)> & visit)
{
  if (k > size) {
    return false;
  }
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) {
    idx[i] = i;
  }
  while (true) {
    if (visit(idx)) {
      return true;
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == size - k + i - 1) {
      --i;
    }
    if (i == 0) {
      return false;
    }
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) {
      idx[j] = idx[j - 1] + 1;
    }
  }
}

void check_size(const Digraph & g, const OracleBudget & budget)
{
  if (g.vertex_count() > budget.max_vertices || g.edge_count() > budget.max_edges) {
    throw Error(ErrorCode::InstanceTooLarge,
                "oracle limited to " + std::to_string(budget.max_vertices) + " vertices and " +
                  std::to_string(budget.max_edges) + " edges");
  }
}

std::vector<Element> link_elements(const Digraph & g)
{
  std::vector<Element> out;
  for (const auto & e : g.edges()) {
    out.push_back({true, e, 0});
  }
  return out;
}

std::vector<Element> vertex_elements(const VertexSet & vs)
{
  std::vector<Element> out;
  for (const auto v : vs) {
    out.push_back({false, {}, v});
  }
  return out;
}

// Smallest k such that some k-subset of `pool` breaks controllability.
std::int32_t smallest_breaking(const Failure & failure, const std::vector<Element> & pool, Counter & counter)
{
  std::vector<Element> loss;
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    counter.charge(choose(pool.size(), k));
    const bool found = any_subset(pool.size(), k, [&](const std::vector<std::size_t> & idx) {
      loss.clear();
      for (const auto i : idx) {
        loss.push_back(pool[i]);
      }
      return failure.breaks(loss);
    });
    if (found) {
      return static_cast<std::int32_t>(k);
    }
  }
  return static_cast<std::int32_t>(pool.size());
}

VertexSet non_roots(const Digraph & g)
{
  VertexSet out;
  for (VertexId v = 1; v <= g.capacity(); ++v) {
    if (g.contains(v) && !g.is_root(v)) {
      out.push_back(v);
    }
  }
  return out;
}

bool degenerate(const Digraph & g)
{
  return non_roots(g).empty() || !is_controllable(g);
}

std::int32_t smallest_over(const Digraph & g, const std::vector<Element> & pool, const OracleBudget & budget)
{
  check_size(g, budget);
  if (degenerate(g)) {
    return 0;
  }
  Counter counter(budget.max_subset_candidates);
  return smallest_breaking(Failure(g, non_roots(g)), pool, counter);
}

}  // namespace

std::int32_t oracle_lc(const Digraph & g, const OracleBudget & budget)
{
  return smallest_over(g, link_elements(g), budget);
}

std::int32_t oracle_ac(const Digraph & g, const OracleBudget & budget)
{
  return smallest_over(g, vertex_elements(non_roots(g)), budget);
}

std::int32_t oracle_jc(const Digraph & g, const OracleBudget & budget)
{
  auto pool = link_elements(g);
  const auto agents = vertex_elements(non_roots(g));
  pool.insert(pool.end(), agents.begin(), agents.end());
  return smallest_over(g, pool, budget);
}

std::int32_t oracle_ac(const EdgeDuplicate & dup, const OracleBudget & budget)
{
  const auto & h = dup.graph;
  // size limits apply to the original digraph the duplicate was built from
  const auto whites = dup.white_followers();
  const auto original_vertices = static_cast<std::int32_t>(whites.size() + h.roots().size());
  const auto original_edges = static_cast<std::int32_t>(dup.edge_of_black.size());
  if (original_vertices > budget.max_vertices || original_edges > budget.max_edges) {
    throw Error(ErrorCode::InstanceTooLarge, "oracle size limits exceeded");
  }
  if (whites.empty() || !is_controllable(h)) {
    return 0;
  }
  Counter counter(budget.max_subset_candidates);
  return smallest_breaking(Failure(h, whites), vertex_elements(non_roots(h)), counter);
}

bool oracle_joint_rs(const Digraph & g, std::int32_t r, std::int32_t s, const OracleBudget & budget)
{
  if (r < 0 || s < 0) {
    throw Error(ErrorCode::InvalidArgument, "r and s must be non-negative");
  }
  check_size(g, budget);
  if (!is_controllable(g)) {
    return false;
  }
  const auto links = link_elements(g);
  const auto agents = vertex_elements(non_roots(g));
  const Failure failure(g, non_roots(g));
  Counter counter(budget.max_subset_candidates);
  std::vector<Element> loss;
  for (std::int32_t u = 0; u <= r; ++u) {
    for (std::int32_t v = 0; v <= s; ++v) {
      if (u + v >= r + s) {
        continue;
      }
      const auto nu = static_cast<std::size_t>(u);
      const auto nv = static_cast<std::size_t>(v);
      const auto count_links = choose(links.size(), nu);
      const auto count_agents = choose(agents.size(), nv);
      counter.charge(count_agents != 0 && count_links > UINT64_MAX / count_agents ? UINT64_MAX
                                                                                    : count_links * count_agents);
      const bool broken = any_subset(links.size(), nu, [&](const std::vector<std::size_t> & li) {
        return any_subset(agents.size(), nv, [&](const std::vector<std::size_t> & ai) {
          loss.clear();
          for (const auto i : li) {
            loss.push_back(links[i]);
          }
          for (const auto i : ai) {
            loss.push_back(agents[i]);
          }
          return failure.breaks(loss);
        });
      });
      if (broken) {
        return false;
      }
    }
  }
  return true;
}

JointRegion oracle_region(const Digraph & g, const OracleBudget & budget)
{
  JointRegion region;
  if (degenerate(g)) {
    check_size(g, budget);
    region.members = {{false}};
    return region;
  }
  region.lc = oracle_lc(g, budget);
  region.ac = oracle_ac(g, budget);
  region.jc = oracle_jc(g, budget);
  region.members.assign(static_cast<std::size_t>(region.lc) + 1,
                        std::vector<bool>(static_cast<std::size_t>(region.ac) + 1, false));
  for (std::int32_t r = 0; r <= region.lc; ++r) {
    for (std::int32_t s = 0; s <= region.ac; ++s) {
      region.members[r][s] = oracle_joint_rs(g, r, s, budget);
    }
  }
  for (std::int32_t r = 0; r <= region.lc; ++r) {
    for (std::int32_t s = 0; s <= region.ac; ++s) {
      if (region.members[r][s] && !region.contains(r + 1, s) && !region.contains(r, s + 1)) {
        region.frontier.push_back({r, s});
      }
    }
  }
  return region;
}

Digraph random_digraph(std::int32_t n, std::int32_t edge_count, std::int32_t root_count, std::uint64_t seed)
{
  if (n < 1 || root_count < 1 || root_count > n || edge_count < 0) {
    throw Error(ErrorCode::Unsatisfiable, "need n >= 1, 1 <= root_count <= n and edge_count >= 0");
  }
  const auto allowed = static_cast<std::int64_t>(n - root_count) * (n - 1);
  if (edge_count > allowed) {
    throw Error(ErrorCode::Unsatisfiable, std::to_string(edge_count) + " edges requested but at most " +
                                            std::to_string(allowed) + " can avoid self-loops and root heads");
  }
  std::mt19937_64 rng(seed);
  const auto below = [&rng](std::uint64_t bound) {
    const auto limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = rng();
    while (x >= limit) {
      x = rng();
    }
    return x % bound;
  };

  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (VertexId v = 1; v <= n; ++v) {
    order[static_cast<std::size_t>(v - 1)] = v;
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(root_count); ++i) {
    std::swap(order[i], order[i + below(order.size() - i)]);
  }
  VertexSet roots(order.begin(), order.begin() + root_count);
  std::sort(roots.begin(), roots.end());

  EdgeSet pairs;
  for (VertexId t = 1; t <= n; ++t) {
    for (VertexId h = 1; h <= n; ++h) {
      if (t != h && !std::binary_search(roots.begin(), roots.end(), h)) {
        pairs.push_back({t, h});
      }
    }
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(edge_count); ++i) {
    std::swap(pairs[i], pairs[i + below(pairs.size() - i)]);
  }
  pairs.resize(static_cast<std::size_t>(edge_count));
  return Digraph::create(n, roots, pairs);
}

}  // namespace robonet
