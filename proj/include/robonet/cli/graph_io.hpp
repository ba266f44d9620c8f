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


#ifndef ROBONET__CLI__GRAPH_IO_HPP_
#define ROBONET__CLI__GRAPH_IO_HPP_

#include "robonet/digraph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace robonet::cli
{

enum class GraphFormat { json, dot };

struct ParseOptions
{
  /// Drop self-loops with a warning instead of failing.
  bool strip_self_loops = false;
};

struct ParsedGraph
{
  Digraph graph;
  std::vector<std::string> warnings;
};

/// {"n": int, "roots": [int...], "edges": [[tail, head]...]}, 1-based.
ParsedGraph parse_json(std::string_view text, const ParseOptions & options = {});

/// `digraph [name] { 1 [root=true]; 1 -> 2 -> 3; 4; }` with integer node
/// names. The vertex count is the largest node mentioned. Comments in
/// `//`, `#` and `/* */` form are skipped. Anything else is a ParseError
/// carrying line:column.
ParsedGraph parse_dot(std::string_view text, const ParseOptions & options = {});

ParsedGraph parse_graph(std::string_view text, GraphFormat format, const ParseOptions & options = {});

/// Format from the file extension, else from the first significant character.
GraphFormat detect_format(std::string_view path, std::string_view text);

/// Canonical JSON: sorted roots, lexicographic edges, trailing newline.
std::string to_json(const Digraph & g);

/// DOT subset listing every vertex, then every edge.
std::string to_dot(const Digraph & g);

std::string read_file(const std::string & path);
void write_file(const std::string & path, std::string_view content);

}  // namespace robonet::cli

#endif  // ROBONET__CLI__GRAPH_IO_HPP_
