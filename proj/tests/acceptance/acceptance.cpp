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


// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "../support/fixtures.hpp"
#include "robonet/cli/app.hpp"
#include "robonet/cli/graph_io.hpp"
#include "robonet/connectivity.hpp"
#include "robonet/criticality.hpp"
#include "robonet/digraph.hpp"
#include "robonet/families.hpp"
#include "robonet/joint.hpp"
#include "robonet/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace robonet;

namespace
{

struct Verdict
{
  bool pass = true;
  std::string detail;
};

std::string describe(const Digraph & g)
{
  std::ostringstream os;
  os << "n=" << g.capacity() << " roots={";
  for (std::size_t i = 0; i < g.roots().size(); ++i) {
    os << (i ? "," : "") << g.roots()[i];
  }
  os << "} edges={";
  bool first = true;
  for (const auto & e : g.edges()) {
    os << (first ? "" : ",") << "(" << e.tail << "," << e.head << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

std::string vertex_list(const VertexSet & vs)
{
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out += (i ? "," : "") + std::to_string(vs[i]);
  }
  return out + "}";
}

std::string edge_str(Edge e)
{
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

// Shared instance list for the property criteria.
const std::vector<Digraph> & suite()
{
  static const auto instances = test::random_suite(500);
  return instances;
}

Verdict criterion1()
{
  struct Expect
  {
    const char * name;
    Digraph g;
    std::int32_t lc, ac, jc;
  };
  const std::vector<Expect> cases{
    {"circulant(5,{1})", test::g1(), 1, 1, 1},
    {"circulant(5,{1,4})", test::g2(), 2, 2, 2},
    {"circulant(5,{1,3})", test::g3(), 2, 2, 2},
    {"circulant(6,{2,3,5})", test::g4(), 3, 2, 2},
  };
  Verdict v;
  std::ostringstream os;
  for (const auto & c : cases) {
    const auto l = lc(c.g);
    const auto a = ac(c.g);
    const auto j = jc(c.g);
    os << c.name << " lc=" << l << " ac=" << a << " jc=" << j << "; ";
    v.pass = v.pass && l == c.lc && a == c.ac && j == c.jc;
  }
  v.detail = os.str();
  return v;
}

Verdict criterion2()
{
  const auto g = test::g4();
  const auto region = joint_region(g);
  Verdict v;
  std::ostringstream os;
  for (std::int32_t r = 0; r < static_cast<std::int32_t>(region.members.size()); ++r) {
    for (std::int32_t s = 0; s < static_cast<std::int32_t>(region.members[r].size()); ++s) {
      const bool expected = r + s <= 2 || (r == 2 && s == 1) || (r == 3 && s == 0);
      if (region.contains(r, s) != expected) {
        v.pass = false;
        os << "(" << r << "," << s << ") member=" << region.contains(r, s) << "; ";
      }
    }
  }
  const auto c = classify(g);
  os << "frontier={";
  for (const auto & p : region.frontier) {
    os << "(" << p.r << "," << p.s << ")";
  }
  os << "} agent_critical=" << c.agent_critical
     << " link_critical=" << (c.link_critical ? std::to_string(*c.link_critical) : "undefined");
  v.pass = v.pass && !c.agent_critical && c.link_critical == false;
  v.detail = os.str();
  return v;
}

Verdict criterion3()
{
  struct Expect
  {
    std::string name;
    Digraph g;
    std::int32_t jc;
  };
  std::vector<Expect> cases;
  for (std::int32_t n = 2; n <= 7; ++n) {
    cases.push_back({"complete(" + std::to_string(n) + ")", complete_rooted(n), n - 1});
  }
  cases.push_back({"kautz(2,2)", kautz_rooted(2, 2), 2});
  cases.push_back({"kautz(3,1)", kautz_rooted(3, 1), 3});
  Verdict v;
  std::ostringstream os;
  for (const auto & c : cases) {
    const auto j = jc(c.g);
    const auto cls = classify(c.g);
    const bool ok = j == c.jc && cls.jointly_critical == true;
    v.pass = v.pass && ok;
    os << c.name << " jc=" << j << " agent=" << cls.agent_critical
       << " link=" << (cls.link_critical ? std::to_string(*cls.link_critical) : "undefined")
       << (ok ? "" : " [miss]") << "; ";
  }
  v.detail = os.str();
  return v;
}

Verdict criterion4()
{
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  std::size_t mismatches = 0;
  std::string first;
  for (const auto & g : suite()) {
    const auto l = lc(g);
    const auto a = ac(g);
    const auto j = jc(g);
    const bool ok = j == std::min(l, a) && l == oracle_lc(g) && a == oracle_ac(g) && j == oracle_jc(g);
    if (!ok) {
      ++mismatches;
      if (first.empty()) {
        first = " first: " + describe(g);
      }
    }
  }
  const auto seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.pass = mismatches == 0 && seconds <= 300.0;
  std::ostringstream os;
  os << suite().size() << " instances, mismatches=" << mismatches << ", " << seconds << " s" << first;
  v.detail = os.str();
  return v;
}

Verdict criterion5()
{
  Verdict v;
  std::size_t mismatches = 0;
  const OracleBudget wide{1'000'000, 40, 60};
  std::size_t oracle_checked = 0;
  std::string first;
  for (const auto & g : suite()) {
    const auto dup = edge_duplicate(g);
    const auto fast = ac_over(dup.graph, dup.white_followers());
    bool ok = fast == jc(g);
    try {
      ok = ok && oracle_ac(dup, wide) == jc(g);
      ++oracle_checked;
    } catch (const Error &) {
    }
    if (!ok) {
      ++mismatches;
      if (first.empty()) {
        first = " first: " + describe(g);
      }
    }
  }
  v.pass = mismatches == 0;
  v.detail = std::to_string(suite().size()) + " instances, mismatches=" + std::to_string(mismatches) +
             ", oracle-confirmed on duplicate=" + std::to_string(oracle_checked) + first;
  return v;
}

Verdict criterion6()
{
  std::size_t rho_seen = 0, rho_bad = 0, domain_bad = 0;
  std::size_t agent_seen = 0, agent_bad = 0;
  std::size_t direct_seen = 0, direct_bad = 0;
  std::size_t diff_seen = 0, diff_bad = 0;
  std::string rho_example, diff_example;
  for (const auto & g : suite()) {
    if (!test::analyzable(g)) {
      continue;
    }
    const auto a = ac(g);
    for (const auto & e : g.edges()) {
      const auto r = *rho(g, e);
      ++rho_seen;
      if (r != 0 && r != 1) {
        ++rho_bad;
        if (rho_example.empty()) {
          rho_example = " rho" + edge_str(e) + "=" + std::to_string(r) + " on " + describe(g);
        }
      }
      // a single link into a follower that also has another root link, or into a
      // follower with no root link, moves ac by at most one
      std::int32_t root_links = 0;
      for (const auto & f : g.in_edges(e.head)) {
        root_links += g.is_root(f.tail) ? 1 : 0;
      }
      const bool other_root_link = root_links > (g.is_root(e.tail) ? 1 : 0);
      if ((other_root_link && r != 0) || (root_links == 0 && r > 1)) {
        ++domain_bad;
      }
      if (!g.is_root(e.tail)) {
        ++diff_seen;
        const auto without = remove_edges(g, std::span<const Edge>(&e, 1));
        const auto diff = ac_vertex(g, e.head) - ac_vertex(without, e.head);
        if (diff != r) {
          ++diff_bad;
          if (diff_example.empty()) {
            diff_example = " rho" + edge_str(e) + "=" + std::to_string(r) + " vs drop " +
                           std::to_string(diff) + " on " + describe(g);
          }
        }
      }
    }
    const auto followers = g.followers();
    const bool all_direct = std::all_of(
      followers.begin(), followers.end(), [&](VertexId v) { return g.directly_rooted(v); });
    if (all_direct) {
      ++direct_seen;
      bool ok = a == g.follower_count();
      for (const auto v : followers) {
        ok = ok && *delta(g, v) == 0;
      }
      direct_bad += ok ? 0 : 1;
    } else if (a == g.follower_count()) {
      ++direct_bad;
    }
    if (a < g.follower_count()) {
      for (const auto v : followers) {
        ++agent_seen;
        if ((*delta(g, v) == 1) != is_agent_critical(g, v)) {
          ++agent_bad;
        }
      }
    }
  }
  Verdict v;
  v.pass = rho_bad == 0 && agent_bad == 0 && direct_bad == 0 && diff_bad == 0;
  std::ostringstream os;
  os << "rho in {0,1}: " << rho_bad << "/" << rho_seen << " violations" << rho_example
     << "; restricted rho laws (other root link -> 0, no root link -> <=1): " << domain_bad
     << " violations; delta=1 <-> critical agent: " << agent_bad << "/" << agent_seen
     << "; all-direct biconditional: " << direct_bad << " violations over " << direct_seen
     << " all-direct instances; ac drop identity: " << diff_bad << "/" << diff_seen << diff_example;
  v.detail = os.str();
  return v;
}

Verdict criterion7()
{
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // applicable, failed
  std::map<std::string, std::string> example;
  std::size_t sub_fail = 0, sub_seen = 0;
  std::vector<Digraph> instances = suite();
  for (const auto & g : {test::g1(), test::g2(), test::g3(), test::g4(), kautz_rooted(2, 2),
                         kautz_rooted(3, 1), kautz_rooted(2, 3)}) {
    instances.push_back(g);
  }
  for (std::int32_t n = 2; n <= 7; ++n) {
    instances.push_back(complete_rooted(n));
  }
  for (const auto & g : instances) {
    if (!test::analyzable(g)) {
      continue;
    }
    const auto checks = check_bounds(g, joint_region(g), classify(g));
    const bool subset = g.roots().size() == 1 && ac(g) < g.follower_count();
    for (const auto & c : checks) {
      if (!c.applicable) {
        continue;
      }
      auto & t = tally[c.name];
      ++t.first;
      if (subset) {
        ++sub_seen;
      }
      if (!c.holds) {
        ++t.second;
        sub_fail += subset ? 1 : 0;
        if (!example.contains(c.name)) {
          example[c.name] = c.detail + " on " + describe(g);
        }
      }
    }
  }
  Verdict v;
  std::ostringstream os;
  for (const auto & [name, t] : tally) {
    os << name << " " << t.second << "/" << t.first;
    if (t.second) {
      v.pass = false;
      os << " e.g. " << example[name];
    }
    os << "; ";
  }
  os << "single-root instances with ac below the follower count: " << sub_fail << "/" << sub_seen
     << " failing checks";
  v.detail = os.str();
  return v;
}

Verdict criterion8()
{
  std::size_t r1_seen = 0, r1_bad = 0, r2_seen = 0, r2_bad = 0, r2_skipped = 0;
  std::string r1_example, r2_example;
  std::vector<Digraph> instances = suite();
  for (const auto & g : {test::g1(), test::g2(), test::g3(), test::g4(), kautz_rooted(2, 2)}) {
    instances.push_back(g);
  }
  for (const auto & g : instances) {
    if (!test::analyzable(g)) {
      continue;
    }
    if (classify(g).agent_critical) {
      ++r1_seen;
      const auto cut = min_link_cut_witness(g);
      bool ok = false;
      VertexSet agents;
      try {
        agents = routine1(g, cut);
        ok = agents.size() == cut.size() && !survives(g, {}, agents);
      } catch (const Error &) {
      }
      if (!ok) {
        ++r1_bad;
        if (r1_example.empty()) {
          r1_example = " e.g. " + describe(g) + " cut={";
          for (const auto & e : cut) {
            r1_example += edge_str(e);
          }
          r1_example += "} agents=" + vertex_list(agents);
        }
      }
    }
    const auto sets = enumerate_critical_sets(g, SetKind::agent, 1'000'000, Budget{});
    for (const auto & set : sets.sets) {
      EdgeSet links;
      try {
        links = routine2(g, set.agents);
      } catch (const Error & e) {
        if (e.code() == ErrorCode::ConditionUnmet) {
          ++r2_skipped;
          continue;
        }
        throw;
      }
      ++r2_seen;
      if (links.size() != set.agents.size() || survives(g, links, {})) {
        ++r2_bad;
        if (r2_example.empty()) {
          r2_example = " e.g. " + describe(g) + " agents=" + vertex_list(set.agents) + " links={";
          for (const auto & e : links) {
            r2_example += edge_str(e);
          }
          r2_example += "}";
        }
      }
    }
  }
  Verdict v;
  v.pass = r1_bad == 0 && r2_bad == 0;
  std::ostringstream os;
  os << "routine1 failures " << r1_bad << "/" << r1_seen << r1_example << "; routine2 failures "
     << r2_bad << "/" << r2_seen << " (" << r2_skipped << " sets outside its precondition)"
     << r2_example;
  v.detail = os.str();
  return v;
}

std::string run_cli(std::vector<std::string> args, int & code)
{
  args.insert(args.begin(), "robonet");
  std::vector<const char *> argv;
  for (const auto & a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Verdict criterion9()
{
  const auto path = (std::filesystem::temp_directory_path() / "robonet_acceptance_g4.json").string();
  cli::write_file(path, cli::to_json(test::g4()));
  Verdict v;
  std::size_t runs = 0;
  for (const bool json : {false, true}) {
    std::string reference;
    for (int repeat = 0; repeat < 3; ++repeat) {
      for (const char * workers : {"1", "2", "8"}) {
        std::vector<std::string> args{"analyze", path, "--workers", workers};
        if (json) {
          args.push_back("--json");
        }
        int code = 0;
        const auto out = run_cli(args, code);
        ++runs;
        if (code != 0) {
          v.pass = false;
        }
        if (reference.empty()) {
          reference = out;
        } else if (out != reference) {
          v.pass = false;
        }
      }
    }
  }
  v.detail = std::to_string(runs) + " analyze runs (text and JSON, workers 1/2/8), " +
             (v.pass ? "all byte-identical" : "outputs differ");
  return v;
}

// DOT text in a different layout than the writer: chains, comments, shuffled order.
std::string restyled_dot(const Digraph & g, std::mt19937_64 & rng)
{
  std::vector<std::string> statements;
  for (const auto v : g.vertices()) {
    statements.push_back(std::to_string(v) + (g.is_root(v) ? " [root=\"true\"]" : " [root=false]"));
  }
  EdgeSet pending(g.edges().begin(), g.edges().end());
  std::shuffle(pending.begin(), pending.end(), rng);
  while (!pending.empty()) {
    auto e = pending.back();
    pending.pop_back();
    std::string chain = std::to_string(e.tail) + " -> " + std::to_string(e.head);
    auto next = std::find_if(pending.begin(), pending.end(), [&](Edge f) { return f.tail == e.head; });
    if (next != pending.end() && rng() % 2 == 0) {
      chain += " -> " + std::to_string(next->head);
      pending.erase(next);
    }
    statements.push_back(chain);
  }
  std::shuffle(statements.begin(), statements.end(), rng);
  std::string text = "/* restyled */\ndigraph \"g\" {\n";
  for (const auto & s : statements) {
    text += "  " + s + (rng() % 2 ? ";" : "") + "  // stmt\n";
  }
  return text + "}\n";
}

Verdict criterion10()
{
  const auto graphs = test::random_suite(100, 977);
  std::mt19937_64 rng(5);
  std::size_t failures = 0;
  std::string first;
  for (const auto & g : graphs) {
    bool ok = false;
    try {
      const auto json_text = cli::to_json(g);
      const auto from_json = cli::parse_json(json_text).graph;
      const auto from_dot = cli::parse_dot(cli::to_dot(g)).graph;
      const auto from_restyled = cli::parse_dot(restyled_dot(g, rng)).graph;
      ok = from_json == g && cli::to_json(from_json) == json_text && from_dot == g &&
           from_restyled == g;
    } catch (const Error & e) {
      first = first.empty() ? std::string(" ") + e.what() : first;
    }
    if (!ok) {
      ++failures;
      if (first.empty()) {
        first = " first: " + describe(g);
      }
    }
  }
  Verdict v;
  v.pass = failures == 0;
  v.detail = std::to_string(graphs.size()) + " graphs, failures=" + std::to_string(failures) + first;
  return v;
}

}  // namespace

int main()
{
  const std::vector<std::function<Verdict()>> criteria{
    criterion1, criterion2, criterion3, criterion4, criterion5,
    criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception & e) {
      v = {false, std::string("unexpected error: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::printf("criterion %zu: %s - %s\n", i + 1, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
