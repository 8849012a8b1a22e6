// Input formats: a line-oriented graph format, a small DOT subset, and a
// line-oriented poset format, plus the canonical renderer used for
// round-tripping.
#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chromix/error.hpp"
#include "chromix/graph.hpp"
#include "chromix/poset.hpp"

namespace chromix {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

/// Line format: `vertex <tok>`, `edge <tok> <tok>`, `arc <tok> <tok>` (arc
/// u v means u->v), blank lines and `#` comment lines. Endpoints are
/// auto-declared on first use; duplicates are idempotent. Self-loops are
/// rejected here; loops only arise from contraction.
inline MixedGraph parse_lines(const std::string& text) {
  MixedGraph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    const std::string& directive = tokens[0];
    if (directive == "vertex") {
      if (tokens.size() != 2)
        throw ParseError("expected: vertex <token>", lineno);
      g.add_vertex(tokens[1]);
    } else if (directive == "edge" || directive == "arc") {
      if (tokens.size() != 3)
        throw ParseError("expected: " + directive + " <token> <token>", lineno);
      if (tokens[1] == tokens[2])
        throw ParseError("self-loop " + directive + " rejected: " + tokens[1],
                         lineno);
      if (directive == "edge")
        g.add_edge(tokens[1], tokens[2]);
      else
        g.add_arc(tokens[1], tokens[2]);
    } else {
      throw ParseError("unknown directive: " + directive, lineno);
    }
  }
  return g;
}

/// Canonical text form: vertex lines in vertex order, then edges, then arcs
/// in canonical order. parse_lines(render_lines(g)) == g.
inline std::string render_lines(const MixedGraph& g) {
  std::string out;
  for (const auto& v : g.vertices()) out += "vertex " + v + "\n";
  for (const auto& [a, b] : g.edges()) out += "edge " + a + " " + b + "\n";
  for (const auto& [a, b] : g.arcs()) out += "arc " + a + " " + b + "\n";
  return out;
}

namespace detail {

// Character-level scanner for the DOT subset, tracking line/column.
class DotScanner {
 public:
  explicit DotScanner(const std::string& text) : text_(text) {}

  struct Token {
    std::string value;  // identifier text, or single punctuation, or ""
    int line, column;
  };

  /// Next token after whitespace/comments; empty value at end of input.
  Token next() {
    skip_trivia();
    Token t{"", line_, column_};
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        t.value += take();
      return t;
    }
    if (c == '-' && pos_ + 1 < text_.size() &&
        (text_[pos_ + 1] == '-' || text_[pos_ + 1] == '>')) {
      t.value += take();
      t.value += take();
      return t;
    }
    if (c == '{' || c == '}' || c == ';') {
      t.value += take();
      return t;
    }
    if (c == '[')
      throw ParseError("unsupported feature: attribute list", line_, column_);
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     column_);
  }

 private:
  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() &&
                              text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

inline bool is_dot_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace detail

/// DOT subset: `graph <id>? { ... }` or `digraph <id>? { ... }` whose body is
/// a sequence of `a -- b;` (edge) and `a -> b;` (arc) statements.
/// Identifiers are alphanumeric/underscore; `//` and `#` comments are
/// skipped. Attributes and subgraphs are rejected with an unsupported-feature
/// error naming the construct.
inline MixedGraph parse_dot_subset(const std::string& text) {
  detail::DotScanner scan(text);
  auto tok = scan.next();
  if (tok.value != "graph" && tok.value != "digraph")
    throw ParseError("expected 'graph' or 'digraph', got '" + tok.value + "'",
                     tok.line, tok.column);
  tok = scan.next();
  if (detail::is_dot_identifier(tok.value)) {
    if (tok.value == "subgraph")
      throw ParseError("unsupported feature: subgraph", tok.line, tok.column);
    tok = scan.next();  // optional graph name
  }
  if (tok.value != "{")
    throw ParseError("expected '{', got '" + tok.value + "'", tok.line,
                     tok.column);
  MixedGraph g;
  while (true) {
    tok = scan.next();
    if (tok.value == "}") break;
    if (tok.value.empty())
      throw ParseError("unexpected end of input; missing '}'", tok.line,
                       tok.column);
    if (tok.value == "subgraph" || tok.value == "{")
      throw ParseError("unsupported feature: subgraph", tok.line, tok.column);
    if (!detail::is_dot_identifier(tok.value))
      throw ParseError("expected an identifier, got '" + tok.value + "'",
                       tok.line, tok.column);
    std::string left = tok.value;
    auto op = scan.next();
    if (op.value != "--" && op.value != "->")
      throw ParseError("expected '--' or '->', got '" + op.value + "'", op.line,
                       op.column);
    auto right = scan.next();
    if (right.value == "subgraph" || right.value == "{")
      throw ParseError("unsupported feature: subgraph", right.line, right.column);
    if (!detail::is_dot_identifier(right.value))
      throw ParseError("expected an identifier, got '" + right.value + "'",
                       right.line, right.column);
    auto semi = scan.next();
    if (semi.value != ";")
      throw ParseError("expected ';', got '" + semi.value + "'", semi.line,
                       semi.column);
    if (left == right.value)
      throw ParseError("self-loop rejected: " + left, tok.line, tok.column);
    if (op.value == "--")
      g.add_edge(left, right.value);
    else
      g.add_arc(left, right.value);
  }
  tok = scan.next();
  if (!tok.value.empty())
    throw ParseError("trailing input after '}'", tok.line, tok.column);
  return g;
}

/// A parsed poset file: the poset plus its labeling (explicit `label` lines,
/// or a natural labeling when none are given).
struct PosetDocument {
  Poset poset;
  Labeling labeling;
};

/// Poset format: `elem <token>`, `rel <a> <b>` (meaning a <= b; transitive
/// closure is applied), optional `label <token> <int>` lines forming a
/// bijection onto {1..n}, blank lines and `#` comments. Elements referenced
/// by rel/label lines are auto-declared.
inline PosetDocument parse_poset(const std::string& text) {
  std::vector<Vertex> elements;
  auto declare = [&](const Vertex& v) {
    for (const auto& e : elements)
      if (e == v) return;
    elements.push_back(v);
  };
  std::vector<VertexPair> relations;
  std::vector<std::pair<Vertex, int>> labels;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    const std::string& directive = tokens[0];
    if (directive == "elem") {
      if (tokens.size() != 2) throw ParseError("expected: elem <token>", lineno);
      declare(tokens[1]);
    } else if (directive == "rel") {
      if (tokens.size() != 3)
        throw ParseError("expected: rel <token> <token>", lineno);
      declare(tokens[1]);
      declare(tokens[2]);
      relations.push_back({tokens[1], tokens[2]});
    } else if (directive == "label") {
      if (tokens.size() != 3)
        throw ParseError("expected: label <token> <int>", lineno);
      declare(tokens[1]);
      try {
        labels.emplace_back(tokens[1], std::stoi(tokens[2]));
      } catch (const std::exception&) {
        throw ParseError("label value is not an integer: " + tokens[2], lineno);
      }
    } else {
      throw ParseError("unknown directive: " + directive, lineno);
    }
  }
  Poset poset = Poset::from_relations(elements, relations);
  if (labels.empty()) {
    Labeling natural = natural_labeling(poset);
    return {poset, natural};
  }
  std::vector<int> omega(elements.size(), 0);
  for (const auto& [token, value] : labels) {
    std::size_t i = poset.index_of(token);
    if (omega[i] != 0) throw PosetError("element labeled twice: " + token);
    omega[i] = value;
  }
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (omega[i] == 0)
      throw PosetError("element missing a label: " + elements[i]);
  return {poset, Labeling(poset, std::move(omega))};
}

}  // namespace chromix
