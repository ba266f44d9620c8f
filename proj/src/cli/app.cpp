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


#include "robonet/cli/app.hpp"

#include "robonet/cli/graph_io.hpp"
#include "robonet/cli/report.hpp"
#include "robonet/connectivity.hpp"
#include "robonet/families.hpp"
#include "robonet/joint.hpp"
#include "robonet/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace robonet::cli
{

namespace
{

struct InputArgs
{
  std::string path;
  std::string format = "auto";
  bool strip_self_loops = false;
};

void add_input(CLI::App & cmd, InputArgs & input, bool required = true)
{
  auto * opt = cmd.add_option("input", input.path, "Graph file (JSON or DOT subset)");
  if (required) {
    opt->required();
  }
  cmd.add_option("--format", input.format, "Input format")->check(CLI::IsMember({"auto", "json", "dot"}));
  cmd.add_flag("--strip-self-loops", input.strip_self_loops, "Drop self-loops with a warning");
}

Digraph load(const InputArgs & input, std::ostream & err)
{
  const auto text = read_file(input.path);
  const auto format = input.format == "json" ? GraphFormat::json
                      : input.format == "dot" ? GraphFormat::dot
                                              : detect_format(input.path, text);
  auto parsed = parse_graph(text, format, {input.strip_self_loops});
  for (const auto & w : parsed.warnings) {
    err << "warning: " << w << "\n";
  }
  return std::move(parsed.graph);
}

std::vector<std::int32_t> parse_list(const std::string & text)
{
  std::vector<std::int32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception &) {
      throw Error(ErrorCode::InvalidConnectionSet, "not an integer list: '" + text + "'");
    }
  }
  return out;
}

struct Comparison
{
  std::string quantity;
  std::string fast;
  std::string reference;

  bool equal() const { return fast == reference; }
};

std::string region_cells(const JointRegion & region)
{
  std::string out;
  for (const auto & p : region.member_list()) {
    out += (out.empty() ? "" : " ") + std::to_string(p.r) + "," + std::to_string(p.s);
  }
  return out.empty() ? "none" : out;
}

std::vector<Comparison> compare(const Digraph & g, const Budget & budget, const OracleBudget & oracle_budget)
{
  std::vector<Comparison> rows;
  const auto add = [&](std::string name, std::int64_t fast, std::int64_t reference) {
    rows.push_back({std::move(name), std::to_string(fast), std::to_string(reference)});
  };
  const auto olc = oracle_lc(g, oracle_budget);
  const auto oac = oracle_ac(g, oracle_budget);
  const auto ojc = oracle_jc(g, oracle_budget);
  add("lc", lc(g), olc);
  add("ac", ac(g), oac);
  add("jc", jc(g), ojc);
  add("min(lc,ac)", std::min(lc(g), ac(g)), std::min(olc, oac));
  add("ac(duplicate)", jc_via_duplicate(g), oracle_ac(edge_duplicate(g), oracle_budget));
  rows.push_back({"region", region_cells(joint_region(g, budget)), region_cells(oracle_region(g, oracle_budget))});
  return rows;
}

void print_comparison(std::ostream & out, const std::vector<Comparison> & rows)
{
  std::size_t width = 8;
  for (const auto & row : rows) {
    width = std::max({width, row.quantity.size()});
  }
  for (const auto & row : rows) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << row.quantity << "  fast=" << row.fast
        << "  oracle=" << row.reference << "  " << (row.equal() ? "ok" : "MISMATCH") << "\n";
  }
}

}  // namespace

int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Controllability robustness analysis of leader-follower digraphs", "robonet"};
  app.require_subcommand(1);

  // generate
  auto * gen = app.add_subcommand("generate", "Write a rootified family digraph");
  std::string kind_name;
  FamilySpec spec;
  std::string b_text;
  std::string gen_out;
  std::string gen_format = "json";
  gen->add_option("kind", kind_name, "complete|kautz|circulant|simple_loop|double_loop|daisy_chain")->required();
  gen->add_option("--n", spec.n, "Vertex count");
  gen->add_option("--b", b_text, "Circulant connection set, comma separated");
  gen->add_option("--d", spec.d, "Kautz degree");
  gen->add_option("--kappa", spec.kappa, "Kautz exponent");
  gen->add_option("--root", spec.root, "Root vertex")->capture_default_str();
  gen->add_option("--out,-o", gen_out, "Output path (stdout when omitted)");
  gen->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"json", "dot"}));

  // analyze
  auto * ana = app.add_subcommand("analyze", "Report degrees, indices, classification and region");
  InputArgs ana_in;
  AnalyzeOptions options;
  bool want_degrees = false;
  bool want_indices = false;
  bool want_classify = false;
  bool want_region = false;
  bool want_bounds = false;
  bool want_witnesses = false;
  bool as_json = false;
  std::string csv_path;
  std::uint64_t ana_budget = Budget::from_env().max_candidates;
  add_input(*ana, ana_in);
  ana->add_flag("--degrees", want_degrees, "lc, ac and jc");
  ana->add_flag("--indices", want_indices, "Per-edge and per-vertex indices");
  ana->add_flag("--classify", want_classify, "Agent-, link- and joint criticality");
  ana->add_flag("--region", want_region, "Joint (r,s) region");
  ana->add_flag("--bounds", want_bounds, "Edge-count and region bound checks");
  ana->add_flag("--witnesses", want_witnesses, "Critical link, agent and agent-link sets");
  ana->add_flag("--json", as_json, "Emit JSON instead of text");
  ana->add_option("--workers", options.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  ana->add_option("--budget", ana_budget, "Enumeration candidate budget");
  ana->add_option("--csv", csv_path, "Also write the region cells as CSV");

  // verify
  auto * ver = app.add_subcommand("verify", "Compare fast results against the brute-force oracle");
  InputArgs ver_in;
  std::int32_t sweep = 0;
  std::uint64_t seed = 1;
  std::int32_t max_n = 7;
  std::uint64_t ver_budget = Budget::from_env().max_candidates;
  OracleBudget oracle_budget;
  add_input(*ver, ver_in, false);
  ver->add_option("--random", sweep, "Also check this many seeded random digraphs");
  ver->add_option("--seed", seed, "Seed of the random sweep")->capture_default_str();
  ver->add_option("--max-n", max_n, "Largest vertex count in the sweep")->capture_default_str()->check(CLI::Range(2, 10));
  ver->add_option("--budget", ver_budget, "Enumeration candidate budget");
  ver->add_option("--max-vertices", oracle_budget.max_vertices, "Oracle vertex limit")->capture_default_str();
  ver->add_option("--max-edges", oracle_budget.max_edges, "Oracle edge limit")->capture_default_str();

  // export-region
  auto * exp = app.add_subcommand("export-region", "Write r,s,member rows for the bounding box");
  InputArgs exp_in;
  std::string exp_out;
  std::uint64_t exp_budget = Budget::from_env().max_candidates;
  add_input(*exp, exp_in);
  exp->add_option("--out,-o", exp_out, "CSV path (stdout when omitted)");
  exp->add_option("--budget", exp_budget, "Enumeration candidate budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const auto code = app.exit(e, out, err);
    return code == 0 ? ExitCode::success : ExitCode::input_error;
  }

  try {
    if (gen->parsed()) {
      const auto kind = family_kind_from_string(kind_name);
      if (!kind) {
        err << "error: unknown family '" << kind_name << "'\n";
        return ExitCode::input_error;
      }
      spec.kind = *kind;
      if (!b_text.empty()) {
        spec.b_set = parse_list(b_text);
      }
      const auto g = generate(spec);
      const auto text = gen_format == "json" ? to_json(g) : to_dot(g);
      const std::string summary = std::string(to_string(spec.kind)) + " n=" + std::to_string(g.vertex_count()) +
                                  " edges=" + std::to_string(g.edge_count()) + "\n";
      if (gen_out.empty()) {
        out << text;
        err << summary;
      } else {
        write_file(gen_out, text);
        out << summary;
      }
      return ExitCode::success;
    }

    if (ana->parsed()) {
      const auto g = load(ana_in, err);
      const bool any = want_degrees || want_indices || want_classify || want_region || want_bounds || want_witnesses;
      options.degrees = !any || want_degrees;
      options.indices = !any || want_indices;
      options.classify = !any || want_classify;
      options.region = !any || want_region;
      options.bounds = !any || want_bounds;
      options.witnesses = !any || want_witnesses;
      options.budget.max_candidates = ana_budget;
      const auto report = analyze(g, options);
      out << (as_json ? render_json(report) : render_text(report));
      if (!csv_path.empty()) {
        write_file(csv_path, region_csv(g, options.budget));
      }
      return report.exhausted ? ExitCode::budget_exhausted : ExitCode::success;
    }

    if (ver->parsed()) {
      if (ver_in.path.empty() && sweep <= 0) {
        err << "error: verify needs an input file or --random N\n";
        return ExitCode::input_error;
      }
      oracle_budget.max_subset_candidates = ver_budget;
      const Budget budget{ver_budget};
      std::size_t mismatches = 0;
      if (!ver_in.path.empty()) {
        const auto rows = compare(load(ver_in, err), budget, oracle_budget);
        out << ver_in.path << "\n";
        print_comparison(out, rows);
        mismatches += static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Comparison & c) {
          return !c.equal();
        }));
      }
      if (sweep > 0) {
        std::mt19937_64 rng(seed);
        std::size_t bad_instances = 0;
        for (std::int32_t i = 0; i < sweep; ++i) {
          const auto n = 2 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(max_n - 1));
          const auto roots = n >= 3 ? 1 + static_cast<std::int32_t>(rng() % 2) : 1;
          const auto allowed = (n - roots) * (n - 1);
          const auto hi = std::min(allowed, oracle_budget.max_edges);
          const auto lo = std::min(n - 1, hi);
          const auto m = lo + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
          const auto g = random_digraph(n, m, roots, rng());
          const auto rows = compare(g, budget, oracle_budget);
          if (!std::all_of(rows.begin(), rows.end(), [](const Comparison & c) { return c.equal(); })) {
            ++bad_instances;
            out << "instance " << i << ": " << to_json(g);
            print_comparison(out, rows);
          }
        }
        out << "random sweep: instances=" << sweep << " seed=" << seed << " mismatching=" << bad_instances << "\n";
        mismatches += bad_instances;
      }
      return mismatches == 0 ? ExitCode::success : ExitCode::oracle_mismatch;
    }

    if (exp->parsed()) {
      const auto csv = region_csv(load(exp_in, err), Budget{exp_budget});
      if (exp_out.empty()) {
        out << csv;
      } else {
        write_file(exp_out, csv);
      }
      return ExitCode::success;
    }
  } catch (const Error & e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InstanceTooLarge ? ExitCode::budget_exhausted : ExitCode::input_error;
  }
  return ExitCode::input_error;
}

}  // namespace robonet::cli
