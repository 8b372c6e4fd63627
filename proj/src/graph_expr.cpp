#include "cordial/graph_expr.hpp"

#include <cctype>

#include "cordial/io.hpp"

namespace cordial {

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "parse error at position " + std::to_string(pos) + ": expected ";
    for (size_t i = 0; i < expected.size(); ++i)
      msg += (i ? " | " : "") + expected[i];
    throw ParseError(msg, pos, std::move(expected));
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '-'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  int number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail({"<integer>"});
    return std::stoi(std::string(text.substr(start, pos - start)));
  }

  // File path token: everything up to a delimiter or whitespace.
  std::string path_token() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail({"<path>"});
    return std::string(text.substr(start, pos - start));
  }

  GraphExpr expr() {
    skip_ws();
    size_t at = pos;
    std::string name = word();
    if (name == "join" || name == "corona" || name == "tensor") {
      GraphExpr e;
      e.op = name;
      if (!eat('(')) fail({"("});
      e.children.push_back(expr());
      if (!eat(',')) fail({","});
      e.children.push_back(expr());
      if (!eat(')')) fail({")"});
      return e;
    }
    static const std::vector<std::pair<std::string, int>> atoms = {
        {"path", 1},  {"cycle", 1}, {"star", 1},  {"complete", 1},
        {"empty", 1}, {"ladder", 1}, {"kayak", 3}, {"snake", 2},
    };
    if (name == "file") {
      if (!eat(':')) fail({":"});
      GraphExpr e;
      e.op = "file";
      e.file = path_token();
      return e;
    }
    for (auto& [atom, arity] : atoms) {
      if (name != atom) continue;
      if (!eat(':')) fail({":"});
      GraphExpr e;
      e.op = name;
      e.args.push_back(number());
      for (int k = 1; k < arity; ++k) {
        if (!eat(',')) fail({","});
        e.args.push_back(number());
      }
      return e;
    }
    pos = at;
    fail({"path:", "cycle:", "star:", "complete:", "empty:", "ladder:", "kayak:", "snake:",
          "file:", "join(", "corona(", "tensor("});
  }
};

}  // namespace

GraphExpr parse_graph_expr(std::string_view text) {
  Parser p{text};
  GraphExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail({"<end of input>"});
  return e;
}

Graph eval_graph_expr(const GraphExpr& e) {
  if (e.op == "join") return join(eval_graph_expr(e.children[0]), eval_graph_expr(e.children[1]));
  if (e.op == "corona")
    return corona(eval_graph_expr(e.children[0]), eval_graph_expr(e.children[1]));
  if (e.op == "tensor")
    return tensor(eval_graph_expr(e.children[0]), eval_graph_expr(e.children[1]));
  if (e.op == "file") return load_graph(e.file);
  if (e.op == "path") return path(e.args[0]);
  if (e.op == "cycle") return cycle(e.args[0]);
  if (e.op == "star") return star(e.args[0]);
  if (e.op == "complete") return complete(e.args[0]);
  if (e.op == "empty") return empty_graph(e.args[0]);
  if (e.op == "ladder") return ladder(e.args[0]);
  if (e.op == "kayak") return kayak_paddle(e.args[0], e.args[1], e.args[2]);
  if (e.op == "snake") return snake(e.args[0], e.args[1]);
  throw std::logic_error("eval_graph_expr: unknown node " + e.op);
}

Graph graph_from_expr(const std::string& text) {
  return eval_graph_expr(parse_graph_expr(text));
}

std::string to_string(const GraphExpr& e) {
  if (!e.children.empty())
    return e.op + "(" + to_string(e.children[0]) + "," + to_string(e.children[1]) + ")";
  if (e.op == "file") return "file:" + e.file;
  std::string out = e.op + ":";
  for (size_t i = 0; i < e.args.size(); ++i) out += (i ? "," : "") + std::to_string(e.args[i]);
  return out;
}

}  // namespace cordial
