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


#ifndef ROBONET__CLI__REPORT_HPP_
#define ROBONET__CLI__REPORT_HPP_

#include "robonet/digraph.hpp"
#include "robonet/error.hpp"

#include <json.hpp>

#include <string>

namespace robonet::cli
{

struct AnalyzeOptions
{
  bool degrees = true;
  bool indices = true;
  bool classify = true;
  bool region = true;
  bool bounds = true;
  bool witnesses = true;
  unsigned workers = 1;
  Budget budget;
};

struct Report
{
  /// Ordered document; both renderings are produced from it.
  nlohmann::ordered_json document;
  /// True when a section ran out of enumeration budget.
  bool exhausted = false;
};

Report analyze(const Digraph & g, const AnalyzeOptions & options);

std::string render_json(const Report & report);

/// Plain-text tables. Missing values print as "undefined".
std::string render_text(const Report & report);

/// `r,s,member` rows covering the bounding box, member as 0 or 1.
std::string region_csv(const Digraph & g, const Budget & budget);

}  // namespace robonet::cli

#endif  // ROBONET__CLI__REPORT_HPP_
