#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cordial/graph.hpp"

namespace cordial {

// Grammar:
//   expr := atom | "join(" expr "," expr ")" | "corona(" expr "," expr ")"
//                | "tensor(" expr "," expr ")"
//   atom := "path:"n | "cycle:"n | "star:"n | "complete:"n | "empty:"n
//         | "ladder:"n | "kayak:"n","m","k | "snake:"n","m | "file:"path
// Whitespace is ignored everywhere.
struct GraphExpr {
  std::string op;                   // constructor or combinator name
  std::vector<int> args;            // numeric atom parameters
  std::string file;                 // "file" atoms
  std::vector<GraphExpr> children;  // combinator operands
};

struct ParseError : std::runtime_error {
  size_t position;
  std::vector<std::string> expected;

  ParseError(std::string message, size_t pos, std::vector<std::string> exp)
      : std::runtime_error(std::move(message)), position(pos), expected(std::move(exp)) {}
};

GraphExpr parse_graph_expr(std::string_view text);

// Builds the graph; "file:" atoms are loaded from disk.
Graph eval_graph_expr(const GraphExpr& expr);

Graph graph_from_expr(const std::string& text);

// Canonical form: parse(to_string(e)) round-trips.
std::string to_string(const GraphExpr& expr);

}  // namespace cordial
