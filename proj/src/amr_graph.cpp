// Copyright 2026 amrx authors
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

#include "amrx/amr_graph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace amrx {

int AmrGraph::find_var(std::string_view var) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].var == var) return static_cast<int>(i);
  return -1;
}

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool variable_shaped(std::string_view s) {
  size_t i = 0;
  while (i < s.size() && s[i] >= 'a' && s[i] <= 'z') ++i;
  if (i == 0 || i > 2) return false;
  size_t letters = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  return i == s.size() && letters >= 1;
}

struct Token {
  enum Kind { LPAREN, RPAREN, SLASH, ATOM, END } kind;
  std::string text;
  size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
    if (pos_ >= text_.size()) return {Token::END, "", pos_};
    size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      return {Token::LPAREN, "(", start};
    }
    if (c == ')') {
      ++pos_;
      return {Token::RPAREN, ")", start};
    }
    if (c == '/') {
      ++pos_;
      return {Token::SLASH, "/", start};
    }
    if (c == '"') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
      if (pos_ >= text_.size()) throw PenmanError("unterminated string literal", start);
      ++pos_;
      return {Token::ATOM, std::string(text_.substr(start, pos_ - start)), start};
    }
    while (pos_ < text_.size() && !is_ws(text_[pos_]) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    return {Token::ATOM, std::string(text_.substr(start, pos_ - start)), start};
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

// Parse-tree child: either a nested node or an unresolved bare atom.
struct RawChild {
  std::string relation;
  int node = -1;         // index into raw nodes
  std::string atom;      // set when node < 0
  size_t atom_offset = 0;
};

struct RawNode {
  std::string var;
  std::string concept_label;
  std::vector<RawChild> children;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  AmrGraph parse() {
    expect(Token::LPAREN, "expected '('");
    int root = parse_node();
    if (tok_.kind != Token::END)
      throw PenmanError("unbalanced parentheses: trailing input", tok_.offset);

    AmrGraph g;
    g.root = root;
    for (auto& rn : raw_) g.nodes.push_back({rn.var, rn.concept_label});
    // second pass: bare atoms resolve against the full variable set, so
    // forward reentrant references work
    for (size_t n = 0; n < raw_.size(); ++n) {
      for (auto& ch : raw_[n].children) {
        AmrGraph::Edge e;
        e.source = static_cast<int>(n);
        e.relation = ch.relation;
        if (ch.node >= 0) {
          e.target = ch.node;
        } else if (auto it = var_index_.find(ch.atom); it != var_index_.end()) {
          e.target = it->second;
        } else if (variable_shaped(ch.atom)) {
          throw PenmanError("reference to undefined variable '" + ch.atom + "'",
                            ch.atom_offset);
        } else {
          e.target = -1;
          e.constant = ch.atom;
        }
        g.edges.push_back(std::move(e));
      }
    }
    validate_parsed(g);
    return g;
  }

 private:
  // '(' already consumed
  int parse_node() {
    if (tok_.kind != Token::ATOM)
      throw PenmanError("expected variable after '('", tok_.offset);
    std::string var = tok_.text;
    size_t var_offset = tok_.offset;
    if (var_index_.count(var))
      throw PenmanError("duplicate variable definition '" + var + "'", var_offset);
    advance();
    expect(Token::SLASH, "expected '/' after variable");
    if (tok_.kind != Token::ATOM)
      throw PenmanError("empty concept_label for variable '" + var + "'", tok_.offset);
    std::string concept_label = tok_.text;
    advance();

    int idx = static_cast<int>(raw_.size());
    raw_.push_back({var, concept_label, {}});
    var_index_[var] = idx;

    while (tok_.kind != Token::RPAREN) {
      if (tok_.kind == Token::END)
        throw PenmanError("unbalanced parentheses: missing ')'", tok_.offset);
      if (tok_.kind != Token::ATOM || tok_.text[0] != ':')
        throw PenmanError("expected relation starting with ':'", tok_.offset);
      RawChild ch;
      ch.relation = tok_.text;
      advance();
      if (tok_.kind == Token::LPAREN) {
        advance();
        ch.node = parse_node();
      } else if (tok_.kind == Token::ATOM) {
        ch.atom = tok_.text;
        ch.atom_offset = tok_.offset;
        advance();
      } else {
        throw PenmanError("expected child after relation", tok_.offset);
      }
      raw_[idx].children.push_back(std::move(ch));
    }
    advance();  // ')'
    return idx;
  }

  void validate_parsed(const AmrGraph& g) {
    std::set<std::tuple<int, std::string, int, std::string>> seen;
    for (const auto& e : g.edges) {
      auto key = std::make_tuple(e.source, e.relation, e.target, e.constant);
      if (!seen.insert(key).second)
        throw ValidationError("duplicate edge " + g.nodes[e.source].var + " " +
                              e.relation);
    }
  }

  void expect(Token::Kind k, const char* msg) {
    if (tok_.kind != k) throw PenmanError(msg, tok_.offset);
    advance();
  }
  void advance() { tok_ = lex_.next(); }

  Lexer lex_;
  Token tok_;
  std::vector<RawNode> raw_;
  std::unordered_map<std::string, int> var_index_;
};

}  // namespace

AmrGraph parse_penman(std::string_view text) { return Parser(text).parse(); }

std::vector<std::vector<int>> canonical_out_edges(const AmrGraph& g) {
  std::vector<std::vector<int>> out(g.nodes.size());
  for (size_t i = 0; i < g.edges.size(); ++i)
    out[g.edges[i].source].push_back(static_cast<int>(i));
  for (auto& lst : out)
    std::stable_sort(lst.begin(), lst.end(), [&](int a, int b) {
      return g.edges[a].relation < g.edges[b].relation;
    });
  return out;
}

namespace {

// Shared DFS over the canonical order; drives serialization and addressing.
template <typename EnterNode, typename VisitConstant, typename Reentrant>
void canonical_dfs(const AmrGraph& g, EnterNode&& enter, VisitConstant&& on_constant,
                   Reentrant&& on_reentrant) {
  auto out = canonical_out_edges(g);
  std::vector<bool> defined(g.nodes.size(), false);

  // recursive walk; AMR graphs are shallow, recursion depth is not a concern
  auto walk = [&](auto&& self, int node, const std::string& address, int depth) -> void {
    defined[node] = true;
    enter(node, address, depth, true);
    int child_index = 0;
    for (int ei : out[node]) {
      const auto& e = g.edges[ei];
      std::string child_addr = address + "." + std::to_string(child_index);
      if (e.is_constant()) {
        on_constant(ei, child_addr, depth + 1);
      } else if (!defined[e.target]) {
        self(self, e.target, child_addr, depth + 1);
      } else {
        on_reentrant(ei);
      }
      ++child_index;
    }
    enter(node, address, depth, false);
  };
  walk(walk, g.root, "0", 0);
}

}  // namespace

Addressing address_graph(const AmrGraph& g) {
  Addressing a;
  a.node_address.resize(g.nodes.size());
  canonical_dfs(
      g,
      [&](int node, const std::string& addr, int depth, bool entering) {
        if (!entering) return;
        a.node_address[node] = addr;
        a.items.push_back({addr, node, -1, depth});
      },
      [&](int edge, const std::string& addr, int depth) {
        a.constant_address[edge] = addr;
        a.items.push_back({addr, -1, edge, depth});
      },
      [&](int) {});
  return a;
}

const Addressing::Item* Addressing::find(const std::string& address) const {
  for (const auto& it : items)
    if (it.address == address) return &it;
  return nullptr;
}

namespace {

std::string serialize_impl(const AmrGraph& g, const std::vector<std::string>* rename) {
  auto out = canonical_out_edges(g);
  std::vector<bool> defined(g.nodes.size(), false);
  std::string s;

  auto name = [&](int node) -> const std::string& {
    return rename ? (*rename)[node] : g.nodes[node].var;
  };

  auto walk = [&](auto&& self, int node) -> void {
    defined[node] = true;
    s += "(";
    s += name(node);
    s += " / ";
    s += g.nodes[node].concept_label;
    for (int ei : out[node]) {
      const auto& e = g.edges[ei];
      s += " ";
      s += e.relation;
      s += " ";
      if (e.is_constant()) {
        s += e.constant;
      } else if (!defined[e.target]) {
        self(self, e.target);
      } else {
        s += name(e.target);
      }
    }
    s += ")";
  };
  walk(walk, g.root);
  return s;
}

}  // namespace

std::string serialize_penman(const AmrGraph& g) { return serialize_impl(g, nullptr); }

std::string serialize_penman_normalized(const AmrGraph& g) {
  // first-visit order equals addressing order
  Addressing a = address_graph(g);
  std::vector<std::string> rename(g.nodes.size());
  int k = 0;
  for (const auto& item : a.items)
    if (item.node >= 0) rename[item.node] = "x" + std::to_string(k++);
  return serialize_impl(g, &rename);
}

void validate(const AmrGraph& g) {
  if (g.nodes.empty()) throw ValidationError("graph has no nodes");
  if (g.root < 0 || g.root >= static_cast<int>(g.nodes.size()))
    throw ValidationError("root index out of range");
  std::set<std::string> vars;
  for (const auto& n : g.nodes) {
    if (n.concept_label.empty()) throw ValidationError("empty concept_label for '" + n.var + "'");
    if (n.var.empty()) throw ValidationError("empty variable id");
    if (!vars.insert(n.var).second)
      throw ValidationError("duplicate variable id '" + n.var + "'");
  }
  std::set<std::tuple<int, std::string, int, std::string>> seen;
  for (const auto& e : g.edges) {
    if (e.source < 0 || e.source >= static_cast<int>(g.nodes.size()))
      throw ValidationError("edge source out of range");
    if (!e.is_constant() && e.target >= static_cast<int>(g.nodes.size()))
      throw ValidationError("edge target out of range");
    if (e.relation.empty() || e.relation[0] != ':')
      throw ValidationError("relation must start with ':'");
    if (!seen.insert({e.source, e.relation, e.target, e.constant}).second)
      throw ValidationError("duplicate edge");
  }
  // reachability from root
  std::vector<bool> reached(g.nodes.size(), false);
  std::vector<int> stack{g.root};
  reached[g.root] = true;
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges)
      if (e.source == n && !e.is_constant() && !reached[e.target]) {
        reached[e.target] = true;
        stack.push_back(e.target);
      }
  }
  for (size_t i = 0; i < reached.size(); ++i)
    if (!reached[i])
      throw ValidationError("node '" + g.nodes[i].var + "' unreachable from root");
}

std::vector<Triple> extract_triples(const AmrGraph& g) {
  std::vector<Triple> out;
  out.reserve(g.nodes.size() + g.edges.size() + 1);
  for (const auto& n : g.nodes) out.push_back({n.var, "instance", n.concept_label, false});
  out.push_back({g.nodes[g.root].var, "TOP", g.nodes[g.root].concept_label, false});
  for (const auto& e : g.edges) {
    if (e.is_constant())
      out.push_back({g.nodes[e.source].var, e.relation, e.constant, false});
    else
      out.push_back({g.nodes[e.source].var, e.relation, g.nodes[e.target].var, true});
  }
  return out;
}

}  // namespace amrx
