#pragma once

// Recursive-descent recognizer for the DOT language grammar (graph, node,
// edge and attribute statements, subgraphs, comments). Test-only; returns an
// error message or the empty string when the text is valid DOT.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dotcheck {

struct Token {
  enum Kind { Id, Punct, EdgeOp, End } kind;
  std::string text;
};

inline std::string tokenize(std::string_view s, std::vector<Token>& out) {
  std::size_t i = 0;
  bool line_start = true;
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n') {
      line_start = true;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (line_start && c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    line_start = false;
    if (s.substr(i, 2) == "//") {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (s.substr(i, 2) == "/*") {
      const auto end = s.find("*/", i + 2);
      if (end == std::string_view::npos) return "unterminated comment";
      i = end + 2;
      continue;
    }
    if (s.substr(i, 2) == "--" || s.substr(i, 2) == "->") {
      out.push_back({Token::EdgeOp, std::string(s.substr(i, 2))});
      i += 2;
      continue;
    }
    if (std::string_view("{}[];,=:").find(c) != std::string_view::npos) {
      out.push_back({Token::Punct, std::string(1, c)});
      ++i;
      continue;
    }
    if (c == '"') {
      std::string text;
      ++i;
      while (i < s.size() && s[i] != '"') {
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        text += s[i++];
      }
      if (i >= s.size()) return "unterminated string";
      ++i;
      out.push_back({Token::Id, text});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Id, std::string(s.substr(start, i - start))});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.') {
      const std::size_t start = i;
      if (s[i] == '-') ++i;
      bool digits = false;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
        digits = digits || s[i] != '.';
        ++i;
      }
      if (!digits) return "bad numeral";
      out.push_back({Token::Id, std::string(s.substr(start, i - start))});
      continue;
    }
    return std::string("unexpected character '") + c + "'";
  }
  out.push_back({Token::End, ""});
  return "";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  std::string graph() {
    if (keyword("strict")) ++p_;
    if (keyword("graph")) {
      edge_op_ = "--";
    } else if (keyword("digraph")) {
      edge_op_ = "->";
    } else {
      return "expected graph or digraph";
    }
    ++p_;
    if (t_[p_].kind == Token::Id) ++p_;
    if (!punct("{")) return "expected {";
    if (auto e = stmt_list(); !e.empty()) return e;
    if (!punct("}")) return "expected }";
    if (t_[p_].kind != Token::End) return "trailing tokens";
    return "";
  }

 private:
  bool keyword(const char* k) const {
    if (t_[p_].kind != Token::Id) return false;
    std::string lower;
    for (char c : t_[p_].text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return lower == k;
  }
  bool punct(const char* c) {
    if (t_[p_].kind == Token::Punct && t_[p_].text == c) {
      ++p_;
      return true;
    }
    return false;
  }
  bool peek(const char* c) const { return t_[p_].kind == Token::Punct && t_[p_].text == c; }

  std::string stmt_list() {
    while (!peek("}") && t_[p_].kind != Token::End) {
      if (auto e = stmt(); !e.empty()) return e;
      punct(";");
    }
    return "";
  }

  std::string attr_list() {
    while (punct("[")) {
      while (!punct("]")) {
        if (t_[p_].kind != Token::Id) return "expected attribute name";
        ++p_;
        if (!punct("=")) return "expected = in attribute";
        if (t_[p_].kind != Token::Id) return "expected attribute value";
        ++p_;
        if (!punct(";")) punct(",");
      }
    }
    return "";
  }

  std::string node_id() {
    if (t_[p_].kind != Token::Id) return "expected node id";
    ++p_;
    if (punct(":")) {
      if (t_[p_].kind != Token::Id) return "expected port";
      ++p_;
      if (punct(":")) {
        if (t_[p_].kind != Token::Id) return "expected compass point";
        ++p_;
      }
    }
    return "";
  }

  std::string subgraph() {
    if (keyword("subgraph")) {
      ++p_;
      if (t_[p_].kind == Token::Id) ++p_;
    }
    if (!punct("{")) return "expected { for subgraph";
    if (auto e = stmt_list(); !e.empty()) return e;
    if (!punct("}")) return "expected } for subgraph";
    return "";
  }

  std::string operand() {
    if (keyword("subgraph") || peek("{")) return subgraph();
    return node_id();
  }

  std::string stmt() {
    if (keyword("graph") || keyword("node") || keyword("edge")) {
      ++p_;
      if (!peek("[")) return "expected attribute list";
      return attr_list();
    }
    if (t_[p_].kind == Token::Id && t_[p_ + 1].kind == Token::Punct && t_[p_ + 1].text == "=") {
      p_ += 2;
      if (t_[p_].kind != Token::Id) return "expected value";
      ++p_;
      return "";
    }
    if (auto e = operand(); !e.empty()) return e;
    while (t_[p_].kind == Token::EdgeOp) {
      if (t_[p_].text != edge_op_) return "edge operator does not match graph kind";
      ++p_;
      if (auto e = operand(); !e.empty()) return e;
    }
    return attr_list();
  }

  std::vector<Token> t_;
  std::size_t p_ = 0;
  std::string edge_op_;
};

inline std::string check_dot(std::string_view text) {
  std::vector<Token> tokens;
  if (auto e = tokenize(text, tokens); !e.empty()) return e;
  return Parser(std::move(tokens)).graph();
}

}  // namespace dotcheck
