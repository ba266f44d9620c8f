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


#include "../support/fixtures.hpp"
#include "robonet/connectivity.hpp"
#include "robonet/criticality.hpp"
#include "robonet/joint.hpp"

#include <doctest.h>

using namespace robonet;
using robonet::test::error_of;
using robonet::test::make;

namespace
{

std::vector<RsPair> sum_at_most(std::int32_t t)
{
  std::vector<RsPair> out;
  for (std::int32_t r = 0; r <= t; ++r) {
    for (std::int32_t s = 0; r + s <= t; ++s) {
      out.push_back({r, s});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const BoundCheck & find_check(const std::vector<BoundCheck> & checks, const std::string & name)
{
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const BoundCheck & c) { return c.name == name; });
  REQUIRE(it != checks.end());
  return *it;
}

}  // namespace

TEST_CASE("joint controllability degree")
{
  for (std::int32_t n = 2; n <= 7; ++n) {
    CHECK(jc(complete_rooted(n)) == n - 1);
  }
  CHECK(jc(kautz_rooted(2, 2)) == 2);
  CHECK(jc(test::g4()) == 2);
  CHECK(jc(test::path3()) == 1);
  CHECK(jc(make(3, {1}, {{1, 2}})) == 0);
}

TEST_CASE("joint degree through the edge-duplicate")
{
  CHECK(jc_via_duplicate(test::path3()) == 1);
  CHECK(jc_via_duplicate(complete_rooted(4)) == 3);
  CHECK(jc_via_duplicate(test::g4()) == 2);
  CHECK(jc_via_duplicate(make(3, {1, 2}, {{1, 3}, {2, 3}})) == 1);
}

TEST_CASE("joint (r,s) controllability")
{
  const auto g4 = test::g4();
  CHECK(is_joint_rs_controllable(g4, 2, 1));
  CHECK(is_joint_rs_controllable(g4, 3, 0));
  CHECK_FALSE(is_joint_rs_controllable(g4, 1, 2));
  CHECK_FALSE(is_joint_rs_controllable(g4, 3, 1));
  CHECK(is_joint_rs_controllable(g4, 0, 0));
  CHECK(is_joint_rs_controllable(test::path3(), 1, 0));
  CHECK_FALSE(is_joint_rs_controllable(test::g2(), 2, 1));
  CHECK_FALSE(is_joint_rs_controllable(make(3, {1}, {{1, 2}}), 0, 0));
  CHECK(error_of([&] { is_joint_rs_controllable(g4, -1, 0); }) == ErrorCode::InvalidArgument);
  // beyond the available followers the largest feasible loss decides
  CHECK_FALSE(is_joint_rs_controllable(test::star(3), 0, 5));
}

TEST_CASE("joint regions of the loop digraphs")
{
  CHECK(joint_region(test::path3()).member_list() == sum_at_most(1));
  CHECK(joint_region(test::g1()).member_list() == sum_at_most(1));
  CHECK(joint_region(test::g2()).member_list() == sum_at_most(2));
  CHECK(joint_region(test::g3()).member_list() == sum_at_most(2));

  const auto region = joint_region(test::g4());
  auto expected = sum_at_most(2);
  expected.push_back({2, 1});
  expected.push_back({3, 0});
  std::sort(expected.begin(), expected.end());
  CHECK(region.lc == 3);
  CHECK(region.ac == 2);
  CHECK(region.jc == 2);
  CHECK(region.member_list() == expected);
  CHECK(region.frontier == std::vector<RsPair>{{0, 2}, {2, 1}, {3, 0}});
  CHECK(region.excess() == std::vector<RsPair>{{2, 1}, {3, 0}});

  const auto none = joint_region(make(3, {1}, {{1, 2}}));
  CHECK(none.member_list().empty());
  CHECK(error_of([] { joint_region(test::g4(), Budget{2}); }) == ErrorCode::InstanceTooLarge);
}

TEST_CASE("joint regions match the literal oracle")
{
  for (const auto & g : test::random_suite(200, 31)) {
    const auto fast = joint_region(g);
    const auto slow = oracle_region(g);
    CHECK(fast.members == slow.members);
    CHECK(fast.frontier == slow.frontier);
    if (!test::analyzable(g)) {
      continue;
    }
    for (const auto & p : fast.member_list()) {
      CHECK(is_joint_rs_controllable(g, p.r, p.s));
      if (p.r > 0) {
        CHECK(fast.contains(p.r - 1, p.s));
      }
      if (p.s > 0) {
        CHECK(fast.contains(p.r, p.s - 1));
      }
      CHECK((p.r != fast.lc || p.s == 0));
      CHECK((p.s != fast.ac || p.r == 0));
    }
    for (std::int32_t t = 0; t <= fast.jc; ++t) {
      for (std::int32_t r = 0; r <= t; ++r) {
        CHECK(fast.contains(r, t - r));
      }
    }
  }
}

TEST_CASE("critical agent-link witness")
{
  const auto p = critical_agent_link_witness(test::path3());
  CHECK(p.agents.empty());
  CHECK(p.links == EdgeSet{{1, 2}});

  const auto g4 = critical_agent_link_witness(test::g4());
  CHECK(g4.size() == 2);
  CHECK(g4.agents == VertexSet{3, 6});

  const auto k4 = critical_agent_link_witness(complete_rooted(4));
  CHECK(k4.size() == 3);
  CHECK(k4.links == EdgeSet{{1, 2}, {1, 3}, {1, 4}});

  CHECK(error_of([] { critical_agent_link_witness(make(3, {1}, {{1, 2}})); }) == ErrorCode::Uncontrollable);

  for (const auto & g : test::random_suite(120, 37)) {
    if (!test::analyzable(g)) {
      continue;
    }
    const auto w = critical_agent_link_witness(g);
    CHECK(static_cast<std::int32_t>(w.size()) == jc(g));
    CHECK_FALSE(survives(g, w.links, w.agents));
  }
}

TEST_CASE("routine 1 turns an out-cut into agents")
{
  const auto p = test::path3();
  CHECK(routine1(p, {{1, 2}}) == VertexSet{2});
  CHECK(routine1(p, {{2, 3}}) == VertexSet{2});
  CHECK(error_of([&] { routine1(p, {{1, 2}, {2, 3}}); }) == ErrorCode::NotAnOutCut);
  CHECK(error_of([&] { routine1(p, {}); }) == ErrorCode::NotAnOutCut);
  CHECK(error_of([&] { routine1(p, {{1, 3}}); }) == ErrorCode::NotAnOutCut);

  const auto g2 = test::g2();
  const auto cut = min_link_cut_witness(g2);
  const auto agents = routine1(g2, cut);
  CHECK(agents == VertexSet{2, 5});
  CHECK_FALSE(survives(g2, {}, agents));
}

TEST_CASE("routine 2 turns a critical agent-set into links")
{
  CHECK(routine2(test::path3(), {2}) == EdgeSet{{2, 3}});
  const auto g2 = test::g2();
  const auto sets = enumerate_critical_sets(g2, SetKind::agent, 100);
  REQUIRE(sets.sets.size() == 3);
  for (const auto & s : sets.sets) {
    const auto links = routine2(g2, s.agents);
    CHECK(links.size() == 2);
    CHECK_FALSE(survives(g2, links, {}));
  }
  CHECK(routine2(g2, {2, 4}) == EdgeSet{{2, 3}, {4, 3}});
  CHECK(error_of([] { routine2(test::star(4), {2, 3, 4}); }) == ErrorCode::ConditionUnmet);
  CHECK(error_of([&] { routine2(g2, {2, 3}); }) == ErrorCode::NotCriticalAgentSet);
  CHECK(error_of([] { routine2(test::path3(), {3}); }) == ErrorCode::NotCriticalAgentSet);
}

TEST_CASE("classification")
{
  for (const auto & g : {test::g1(), test::g2(), test::g3(), kautz_rooted(2, 2)}) {
    const auto c = classify(g);
    CHECK(c.agent_critical);
    CHECK(c.link_critical == true);
    CHECK(c.jointly_critical == true);
    REQUIRE(c.link_critical_witness);
    CHECK(static_cast<std::int32_t>(c.link_critical_witness->size()) == ac(g));
  }

  const auto g4 = classify(test::g4());
  CHECK_FALSE(g4.agent_critical);
  CHECK(g4.link_critical == false);
  CHECK(g4.jointly_critical == false);

  // the only critical agent-set of a rooted complete digraph is every
  // follower, and a follower fed by a root keeps index 0 on its out-links
  const auto k4 = classify(complete_rooted(4));
  CHECK(k4.agent_critical);
  CHECK(k4.link_critical == false);
  CHECK(k4.jointly_critical == false);

  CHECK(error_of([] { classify(make(3, {1}, {{1, 2}})); }) == ErrorCode::Uncontrollable);
  const auto over = classify(test::g4(), Budget{3});
  CHECK_FALSE(over.link_critical.has_value());
  // not agent-critical, so the joint verdict needs no enumeration
  CHECK(over.jointly_critical == false);
}

TEST_CASE("bound checks")
{
  const auto g2 = test::g2();
  const auto g2_checks = check_bounds(g2, joint_region(g2), classify(g2));
  CHECK(find_check(g2_checks, "region_sum_vs_max_degree").applicable);
  CHECK(find_check(g2_checks, "region_sum_vs_max_degree").holds);
  CHECK(find_check(g2_checks, "jointly_critical_region").holds);

  const auto g4 = test::g4();
  const auto g4_checks = check_bounds(g4, joint_region(g4), classify(g4));
  CHECK_FALSE(find_check(g4_checks, "region_sum_vs_max_degree").applicable);
  for (const auto & c : g4_checks) {
    CHECK(c.holds);
  }

  const auto k4 = complete_rooted(4);
  const auto k4_checks = check_bounds(k4, joint_region(k4), classify(k4));
  CHECK(find_check(k4_checks, "edges_vs_link_degree").holds);
  CHECK(find_check(k4_checks, "edges_vs_link_degree").detail == "|E|=9 >= (|V|-1)lc=9");

  const auto twin = make(3, {1, 2}, {{1, 3}, {2, 3}});
  const auto twin_checks = check_bounds(twin, joint_region(twin), classify(twin));
  CHECK_FALSE(find_check(twin_checks, "edges_vs_link_degree").holds);
}
