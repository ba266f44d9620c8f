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


#include "robonet/cli/graph_io.hpp"

#include "robonet/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace robonet::cli
{

namespace
{

using nlohmann::json;

VertexId as_vertex(const json & value, const std::string & where)
{
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::ParseError, where + " must be an integer");
  }
  const auto v = value.get<std::int64_t>();
  if (v < std::numeric_limits<VertexId>::min() || v > std::numeric_limits<VertexId>::max()) {
    throw Error(ErrorCode::ParseError, where + " is out of range");
  }
  return static_cast<VertexId>(v);
}

std::string edge_str(Edge e)
{
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

ParsedGraph build(VertexId n, const VertexSet & roots, EdgeSet edges, const ParseOptions & options)
{
  ParsedGraph parsed;
  if (options.strip_self_loops) {
    std::erase_if(edges, [&](const Edge & e) {
      if (e.tail != e.head) {
        return false;
      }
      parsed.warnings.push_back("dropped self-loop " + edge_str(e));
      return true;
    });
  }
  parsed.graph = Digraph::create(n, roots, edges);
  return parsed;
}

// Tokenizer for the DOT subset.
class DotLexer
{
public:
  enum class Kind { end, integer, word, arrow, lbrace, rbrace, lbracket, rbracket, equals, semicolon, comma, other };

  struct Token
  {
    Kind kind = Kind::end;
    std::string text;
    int line = 1;
    int column = 1;
  };

  explicit DotLexer(std::string_view text) : text_(text) {}

  Token next()
  {
    skip_blank();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      return t;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      if (c == '-' && peek(1) == '>') {
        advance(2);
        t.kind = Kind::arrow;
        t.text = "->";
        return t;
      }
      if (c == '-' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
        advance(1);
        t.kind = Kind::other;
        t.text = std::string(1, c);
        return t;
      }
      const auto start = pos_;
      advance(1);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        advance(1);
      }
      t.kind = Kind::integer;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance(1);
      }
      t.kind = Kind::word;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (c == '"') {
      // quoted strings are only accepted as attribute values
      const auto start = pos_;
      advance(1);
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
        advance(1);
      }
      if (pos_ >= text_.size() || text_[pos_] != '"') {
        t.kind = Kind::other;
        t.text = std::string(text_.substr(start, pos_ - start));
        return t;
      }
      advance(1);
      t.kind = Kind::word;
      t.text = std::string(text_.substr(start + 1, pos_ - start - 2));
      return t;
    }
    advance(1);
    t.text = std::string(1, c);
    switch (c) {
      case '{': t.kind = Kind::lbrace; break;
      case '}': t.kind = Kind::rbrace; break;
      case '[': t.kind = Kind::lbracket; break;
      case ']': t.kind = Kind::rbracket; break;
      case '=': t.kind = Kind::equals; break;
      case ';': t.kind = Kind::semicolon; break;
      case ',': t.kind = Kind::comma; break;
      default: t.kind = Kind::other; break;
    }
    return t;
  }

private:
  char peek(std::size_t ahead) const
  {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t count)
  {
    for (std::size_t i = 0; i < count && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_blank()
  {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else if (c == '#' || (c == '/' && peek(1) == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          advance(1);
        }
      } else if (c == '/' && peek(1) == '*') {
        advance(2);
        while (pos_ < text_.size() && !(text_[pos_] == '*' && peek(1) == '/')) {
          advance(1);
        }
        advance(2);
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class DotParser
{
public:
  using Kind = DotLexer::Kind;
  using Token = DotLexer::Token;

  explicit DotParser(std::string_view text) : lexer_(text) { token_ = lexer_.next(); }

  void parse()
  {
    if (token_.kind == Kind::word && token_.text == "strict") {
      fail("'strict' graphs are not supported");
    }
    if (token_.kind != Kind::word || token_.text != "digraph") {
      fail("expected 'digraph'");
    }
    shift();
    if (token_.kind == Kind::word || token_.kind == Kind::integer) {
      shift();
    }
    expect(Kind::lbrace, "'{'");
    while (token_.kind != Kind::rbrace) {
      if (token_.kind == Kind::end) {
        fail("unexpected end of input, expected '}'");
      }
      statement();
    }
    shift();
    if (token_.kind != Kind::end) {
      fail("unexpected content after the closing '}'");
    }
  }

  VertexId n = 0;
  VertexSet roots;
  EdgeSet edges;

private:
  [[noreturn]] void fail(const std::string & message) const
  {
    throw Error(ErrorCode::ParseError,
                std::to_string(token_.line) + ":" + std::to_string(token_.column) + ": " + message +
                  (token_.kind == Kind::end ? "" : " near '" + token_.text + "'"));
  }

  void shift() { token_ = lexer_.next(); }

  void expect(Kind kind, const char * what)
  {
    if (token_.kind != kind) {
      fail(std::string("expected ") + what);
    }
    shift();
  }

  VertexId node()
  {
    if (token_.kind != Kind::integer) {
      if (token_.kind == Kind::word &&
          (token_.text == "subgraph" || token_.text == "node" || token_.text == "edge" || token_.text == "graph")) {
        fail("'" + token_.text + "' statements are not supported");
      }
      fail("expected an integer node id");
    }
    std::int64_t value = 0;
    try {
      value = std::stoll(token_.text);
    } catch (const std::exception &) {
      fail("node id is out of range");
    }
    if (value < 1 || value > std::numeric_limits<VertexId>::max()) {
      fail("node ids must be positive integers");
    }
    shift();
    const auto v = static_cast<VertexId>(value);
    n = std::max(n, v);
    return v;
  }

  void statement()
  {
    std::vector<VertexId> chain{node()};
    while (token_.kind == Kind::arrow) {
      shift();
      chain.push_back(node());
    }
    if (token_.kind == Kind::lbracket) {
      if (chain.size() > 1) {
        fail("edge attributes are not supported");
      }
      attributes(chain.front());
    }
    if (token_.kind == Kind::semicolon || token_.kind == Kind::comma) {
      shift();
    }
    for (std::size_t i = 1; i < chain.size(); ++i) {
      edges.push_back({chain[i - 1], chain[i]});
    }
  }

  void attributes(VertexId v)
  {
    shift();
    while (token_.kind != Kind::rbracket) {
      if (token_.kind != Kind::word || token_.text != "root") {
        fail("only the 'root' attribute is supported");
      }
      shift();
      expect(Kind::equals, "'='");
      if (token_.kind != Kind::word || (token_.text != "true" && token_.text != "false")) {
        fail("root must be true or false");
      }
      const bool is_root = token_.text == "true";
      shift();
      std::erase(roots, v);
      if (is_root) {
        roots.push_back(v);
      }
      if (token_.kind == Kind::comma || token_.kind == Kind::semicolon) {
        shift();
      }
    }
    shift();
  }

  DotLexer lexer_;
  Token token_;
};

}  // namespace

ParsedGraph parse_json(std::string_view text, const ParseOptions & options)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error & err) {
    throw Error(ErrorCode::ParseError, err.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::ParseError, "top level must be an object");
  }
  for (const auto & [key, value] : doc.items()) {
    if (key != "n" && key != "roots" && key != "edges") {
      throw Error(ErrorCode::ParseError, "unknown key '" + key + "'");
    }
  }
  if (!doc.contains("n") || !doc.contains("roots") || !doc.contains("edges")) {
    throw Error(ErrorCode::ParseError, "keys 'n', 'roots' and 'edges' are required");
  }
  const auto n = as_vertex(doc["n"], "n");
  if (!doc["roots"].is_array() || !doc["edges"].is_array()) {
    throw Error(ErrorCode::ParseError, "'roots' and 'edges' must be arrays");
  }
  VertexSet roots;
  for (std::size_t i = 0; i < doc["roots"].size(); ++i) {
    roots.push_back(as_vertex(doc["roots"][i], "roots[" + std::to_string(i) + "]"));
  }
  EdgeSet edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto & pair = doc["edges"][i];
    const auto where = "edges[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::ParseError, where + " must be a [tail, head] pair");
    }
    edges.push_back({as_vertex(pair[0], where + "[0]"), as_vertex(pair[1], where + "[1]")});
  }
  return build(n, roots, std::move(edges), options);
}

ParsedGraph parse_dot(std::string_view text, const ParseOptions & options)
{
  DotParser parser(text);
  parser.parse();
  std::sort(parser.roots.begin(), parser.roots.end());
  return build(parser.n, parser.roots, std::move(parser.edges), options);
}

ParsedGraph parse_graph(std::string_view text, GraphFormat format, const ParseOptions & options)
{
  return format == GraphFormat::json ? parse_json(text, options) : parse_dot(text, options);
}

GraphFormat detect_format(std::string_view path, std::string_view text)
{
  const auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".json")) {
    return GraphFormat::json;
  }
  if (ends_with(".dot") || ends_with(".gv")) {
    return GraphFormat::dot;
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{' ? GraphFormat::json : GraphFormat::dot;
}

std::string to_json(const Digraph & g)
{
  std::ostringstream out;
  out << "{\"n\": " << g.capacity() << ", \"roots\": [";
  const auto roots = g.roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out << (i ? ", " : "") << roots[i];
  }
  out << "], \"edges\": [";
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << (i ? ", " : "") << "[" << edges[i].tail << ", " << edges[i].head << "]";
  }
  out << "]}\n";
  return out.str();
}

std::string to_dot(const Digraph & g)
{
  std::ostringstream out;
  out << "digraph {\n";
  for (const auto v : g.vertices()) {
    out << "  " << v << (g.is_root(v) ? " [root=true]" : "") << ";\n";
  }
  for (const auto & e : g.edges()) {
    out << "  " << e.tail << " -> " << e.head << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string & path, std::string_view content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  }
  out << content;
}

}  // namespace robonet::cli
