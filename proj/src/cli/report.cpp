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


#include "robonet/cli/report.hpp"

#include "robonet/connectivity.hpp"
#include "robonet/criticality.hpp"
#include "robonet/joint.hpp"

#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

namespace robonet::cli
{

namespace
{

using Json = nlohmann::ordered_json;

Json edge_json(const Edge & e)
{
  return Json::array({e.tail, e.head});
}

Json edges_json(const EdgeSet & edges)
{
  auto out = Json::array();
  for (const auto & e : edges) {
    out.push_back(edge_json(e));
  }
  return out;
}

template <typename T>
Json optional_json(const std::optional<T> & value)
{
  return value ? Json(*value) : Json(nullptr);
}

// Runs `build` and stores its result under `key`. A budget overrun stores
// null and records the section as exhausted.
void section(Report & report, const std::string & key, const std::function<Json()> & build)
{
  try {
    report.document[key] = build();
  } catch (const Error & err) {
    if (err.code() != ErrorCode::InstanceTooLarge) {
      throw;
    }
    report.document[key] = nullptr;
    report.document["budget"]["exhausted"].push_back(key);
    report.exhausted = true;
  }
}

Json indices_json(const Digraph & g, unsigned workers)
{
  const auto table = compute_indices(g, workers);
  Json edges = Json::array();
  for (const auto & rec : table.edges) {
    edges.push_back({{"edge", edge_json(rec.edge)},
                     {"critical", rec.critical},
                     {"rho", optional_json(rec.rho)},
                     {"link_ctrl_index", optional_json(rec.link_ctrl_index)}});
  }
  Json vertices = Json::array();
  for (const auto & rec : table.vertices) {
    vertices.push_back({{"vertex", rec.vertex},
                        {"critical", rec.critical},
                        {"delta", optional_json(rec.delta)},
                        {"theta", optional_json(rec.theta)},
                        {"critical_link_index", optional_json(rec.critical_link_index)},
                        {"uncritical_link_index", optional_json(rec.uncritical_link_index)}});
  }
  return {{"edges", edges}, {"vertices", vertices}, {"ranking", rank_agents(table)}};
}

bool analyzable(const Digraph & g)
{
  return g.follower_count() > 0 && is_controllable(g);
}

Json classification_json(const Classification & c)
{
  return {{"agent_critical", c.agent_critical},
          {"link_critical", optional_json(c.link_critical)},
          {"jointly_critical", optional_json(c.jointly_critical)},
          {"link_critical_witness", optional_json(c.link_critical_witness)}};
}

Json region_json(const JointRegion & region)
{
  Json frontier = Json::array();
  for (const auto & p : region.frontier) {
    frontier.push_back({p.r, p.s});
  }
  Json excess = Json::array();
  for (const auto & p : region.excess()) {
    excess.push_back({p.r, p.s});
  }
  Json members = Json::array();
  for (std::int32_t r = 0; r < static_cast<std::int32_t>(region.members.size()); ++r) {
    for (std::int32_t s = 0; s < static_cast<std::int32_t>(region.members[r].size()); ++s) {
      members.push_back({r, s, static_cast<bool>(region.members[r][s])});
    }
  }
  return {{"box", {region.lc, region.ac}}, {"frontier", frontier}, {"excess", excess}, {"cells", members}};
}

std::string text_value(const Json & v)
{
  if (v.is_null()) {
    return "undefined";
  }
  if (v.is_boolean()) {
    return v.get<bool>() ? "yes" : "no";
  }
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_array()) {
    // [t, h] pairs render as (t,h); other arrays as {a, b, ...}
    if (v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      return "(" + v[0].dump() + "," + v[1].dump() + ")";
    }
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? ", " : "") + text_value(v[i]);
    }
    return out + "}";
  }
  return v.dump();
}

std::string vertex_list(const Json & v)
{
  if (v.is_null()) {
    return "undefined";
  }
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? ", " : "") + v[i].dump();
  }
  return out + "}";
}

void table(std::ostream & out, const std::vector<std::string> & header, const std::vector<std::vector<std::string>> & rows)
{
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto & row : rows) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  const auto line = [&](const std::vector<std::string> & cells) {
    out << " ";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto pad = c + 1 == cells.size() ? 0 : static_cast<int>(width[c]);
      out << " " << std::left << std::setw(pad) << cells[c];
    }
    out << "\n";
  };
  line(header);
  for (const auto & row : rows) {
    line(row);
  }
}

}  // namespace

Report analyze(const Digraph & g, const AnalyzeOptions & options)
{
  Report report;
  auto & doc = report.document;
  doc["graph"] = {{"n", g.capacity()},
                  {"vertices", g.vertex_count()},
                  {"followers", g.follower_count()},
                  {"roots", g.roots()},
                  {"edges", g.edge_count()},
                  {"controllable", is_controllable(g)}};
  doc["budget"] = {{"max_candidates", options.budget.max_candidates}, {"exhausted", Json::array()}};

  if (options.degrees) {
    section(report, "degrees", [&]() -> Json {
      return {{"lc", lc(g)}, {"ac", ac(g)}, {"jc", jc(g)}, {"jc_via_duplicate", jc_via_duplicate(g)}};
    });
  }
  if (options.indices) {
    section(report, "indices", [&]() { return indices_json(g, options.workers); });
  }

  std::optional<Classification> classification;
  std::optional<JointRegion> region;
  if (options.classify) {
    section(report, "classification", [&]() -> Json {
      if (!analyzable(g)) {
        return nullptr;
      }
      classification = classify(g, options.budget);
      return classification_json(*classification);
    });
  }
  if (options.region) {
    section(report, "region", [&]() {
      region = joint_region(g, options.budget);
      return region_json(*region);
    });
  }
  if (options.bounds) {
    section(report, "bounds", [&]() -> Json {
      if (!analyzable(g)) {
        return nullptr;
      }
      if (!classification) {
        classification = classify(g, options.budget);
      }
      if (!region) {
        region = joint_region(g, options.budget);
      }
      Json checks = Json::array();
      for (const auto & check : check_bounds(g, *region, *classification)) {
        checks.push_back(
          {{"name", check.name}, {"applicable", check.applicable}, {"holds", check.holds}, {"detail", check.detail}});
      }
      return checks;
    });
  }
  if (options.witnesses) {
    section(report, "witnesses", [&]() -> Json {
      if (!analyzable(g)) {
        return nullptr;
      }
      const auto mixed = critical_agent_link_witness(g);
      return {{"critical_link_set", edges_json(min_link_cut_witness(g))},
              {"critical_agent_set", min_agent_cut_witness(g)},
              {"agent_link_set", {{"agents", mixed.agents}, {"links", edges_json(mixed.links)}}}};
    });
  }
  return report;
}

std::string render_json(const Report & report)
{
  return report.document.dump(2) + "\n";
}

std::string render_text(const Report & report)
{
  const auto & doc = report.document;
  std::ostringstream out;
  const auto & graph = doc["graph"];
  out << "graph: n=" << graph["n"] << " vertices=" << graph["vertices"] << " followers=" << graph["followers"]
      << " roots=" << vertex_list(graph["roots"]) << " edges=" << graph["edges"]
      << " controllable=" << text_value(graph["controllable"]) << "\n";
  const auto & budget = doc["budget"];
  out << "budget: max_candidates=" << budget["max_candidates"]
      << " exhausted=" << (budget["exhausted"].empty() ? "none" : text_value(budget["exhausted"])) << "\n";

  if (doc.contains("degrees")) {
    const auto & d = doc["degrees"];
    out << "\n[degrees]\n";
    if (d.is_null()) {
      out << "  undefined\n";
    } else {
      out << "  lc=" << d["lc"] << " ac=" << d["ac"] << " jc=" << d["jc"]
          << " jc_via_duplicate=" << d["jc_via_duplicate"] << "\n";
    }
  }
  if (doc.contains("indices")) {
    const auto & idx = doc["indices"];
    out << "\n[indices]\n";
    if (idx.is_null()) {
      out << "  undefined\n";
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const auto & rec : idx["edges"]) {
        rows.push_back({text_value(rec["edge"]), text_value(rec["critical"]), text_value(rec["rho"]),
                        text_value(rec["link_ctrl_index"])});
      }
      table(out, {"edge", "critical", "rho", "link_ctrl_index"}, rows);
      rows.clear();
      for (const auto & rec : idx["vertices"]) {
        rows.push_back({rec["vertex"].dump(), text_value(rec["critical"]), text_value(rec["delta"]),
                        text_value(rec["theta"]), text_value(rec["critical_link_index"]),
                        text_value(rec["uncritical_link_index"])});
      }
      out << "\n";
      table(out, {"vertex", "critical", "delta", "theta", "critical_link_index", "uncritical_link_index"}, rows);
      out << "\n  ranking: " << (idx["ranking"].empty() ? "undefined" : vertex_list(idx["ranking"])) << "\n";
    }
  }
  if (doc.contains("classification")) {
    const auto & c = doc["classification"];
    out << "\n[classification]\n";
    if (c.is_null()) {
      out << "  undefined\n";
    } else {
      out << "  agent_critical=" << text_value(c["agent_critical"])
          << " link_critical=" << text_value(c["link_critical"])
          << " jointly_critical=" << text_value(c["jointly_critical"]) << "\n";
      out << "  link_critical_witness=" << vertex_list(c["link_critical_witness"]) << "\n";
    }
  }
  if (doc.contains("region")) {
    const auto & r = doc["region"];
    out << "\n[region]\n";
    if (r.is_null()) {
      out << "  undefined\n";
    } else {
      out << "  box=[0.." << r["box"][0] << "]x[0.." << r["box"][1] << "]\n";
      out << "  frontier=" << text_value(r["frontier"]) << "\n";
      out << "  excess=" << text_value(r["excess"]) << "\n";
      out << "  r,s,member\n";
      for (const auto & cell : r["cells"]) {
        out << "  " << cell[0] << "," << cell[1] << "," << (cell[2].get<bool>() ? 1 : 0) << "\n";
      }
    }
  }
  if (doc.contains("bounds")) {
    const auto & b = doc["bounds"];
    out << "\n[bounds]\n";
    if (b.is_null()) {
      out << "  undefined\n";
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const auto & check : b) {
        rows.push_back({check["name"].get<std::string>(), text_value(check["applicable"]),
                        text_value(check["holds"]), check["detail"].get<std::string>()});
      }
      table(out, {"check", "applicable", "holds", "detail"}, rows);
    }
  }
  if (doc.contains("witnesses")) {
    const auto & w = doc["witnesses"];
    out << "\n[witnesses]\n";
    if (w.is_null()) {
      out << "  undefined\n";
    } else {
      out << "  critical_link_set=" << text_value(w["critical_link_set"]) << "\n";
      out << "  critical_agent_set=" << vertex_list(w["critical_agent_set"]) << "\n";
      out << "  agent_link_set: agents=" << vertex_list(w["agent_link_set"]["agents"])
          << " links=" << text_value(w["agent_link_set"]["links"]) << "\n";
    }
  }
  return out.str();
}

std::string region_csv(const Digraph & g, const Budget & budget)
{
  const auto region = joint_region(g, budget);
  std::ostringstream out;
  out << "r,s,member\n";
  for (std::size_t r = 0; r < region.members.size(); ++r) {
    for (std::size_t s = 0; s < region.members[r].size(); ++s) {
      out << r << "," << s << "," << (region.members[r][s] ? 1 : 0) << "\n";
    }
  }
  return out.str();
}

}  // namespace robonet::cli
