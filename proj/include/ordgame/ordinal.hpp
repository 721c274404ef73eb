// Copyright 2026 The ordgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "ordgame/error.hpp"
#include "ordgame/game.hpp"
#include "ordgame/mixed.hpp"
#include "ordgame/rational.hpp"

namespace ordgame {

// ---------------------------------------------------------------------------
// Constraint sets

/// `Approx` is written `~=` and behaves as exact equality unless expanded by
/// epsilon_split(); `Equal` (`=`) is never split.
enum class Relation { Greater, GreaterEq, Equal, Approx };

constexpr const char* to_string(Relation r) {
  switch (r) {
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "=";
    case Relation::Approx: return "~=";
  }
  return "?";
}

/// A payoff symbol or a literal rational.
using Term = std::variant<std::string, Rational>;

inline bool is_symbol(const Term& t) { return std::holds_alternative<std::string>(t); }

inline std::string term_to_string(const Term& t) {
  return is_symbol(t) ? std::get<std::string>(t) : std::get<Rational>(t).to_string();
}

inline Term parse_term(std::string_view text) {
  if (Rational::is_literal(text)) return Rational::parse(text);
  return std::string(text);
}

struct OrderConstraint {
  Term lhs;
  Relation rel = Relation::Greater;
  Term rhs;

  std::string to_string() const {
    return term_to_string(lhs) + " " + ordgame::to_string(rel) + " " + term_to_string(rhs);
  }
  friend bool operator==(const OrderConstraint&, const OrderConstraint&) = default;
};

/// A literal whose position relative to a group's symbols is left open.
struct FreeLiteral {
  Rational value;
  std::string group;

  friend bool operator==(const FreeLiteral&, const FreeLiteral&) = default;
};

using Instantiation = std::map<std::string, Rational>;

/*
 * Symbols, order relations among symbols and literals, and free literals.
 *
 * Every symbol belongs to a named group. Symbols of different groups are
 * never compared unless a relation links them, so each connected group is
 * ranked independently; this keeps the two players' payoff chains from
 * interleaving.
 */
class OrderingConstraintSet {
 public:
  void declare(const std::string& symbol, const std::string& group = "") {
    if (symbol.empty()) throw Error(ErrorCode::ParseError, "empty symbol name");
    if (group_.count(symbol)) return;
    group_.emplace(symbol, group);
    symbols_.push_back(symbol);
  }

  void add(Term lhs, Relation rel, Term rhs, const std::string& group = "") {
    if (is_symbol(lhs)) declare(std::get<std::string>(lhs), group);
    if (is_symbol(rhs)) declare(std::get<std::string>(rhs), group);
    constraints_.push_back({std::move(lhs), rel, std::move(rhs)});
  }

  void add_free_literal(Rational value, const std::string& group = "") {
    FreeLiteral f{value, group};
    if (std::find(free_.begin(), free_.end(), f) == free_.end()) free_.push_back(f);
  }

  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::vector<OrderConstraint>& constraints() const noexcept { return constraints_; }
  const std::vector<FreeLiteral>& free_literals() const noexcept { return free_; }

  bool has_symbol(const std::string& s) const { return group_.count(s) != 0; }

  const std::string& group_of(const std::string& s) const {
    auto it = group_.find(s);
    if (it == group_.end()) throw Error(ErrorCode::MissingSymbol, "unknown symbol '" + s + "'");
    return it->second;
  }

  std::vector<std::string> groups() const {
    std::vector<std::string> out;
    for (const auto& s : symbols_) {
      const auto& g = group_.at(s);
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    for (const auto& f : free_) {
      if (std::find(out.begin(), out.end(), f.group) == out.end()) out.push_back(f.group);
    }
    return out;
  }

  std::vector<OrderConstraint> strict_relations() const { return filter(Relation::Greater); }

  void set_constraints(std::vector<OrderConstraint> cs) {
    for (const auto& c : cs) {
      for (const Term* t : {&c.lhs, &c.rhs}) {
        if (is_symbol(*t) && !has_symbol(std::get<std::string>(*t))) declare(std::get<std::string>(*t));
      }
    }
    constraints_ = std::move(cs);
  }
  void set_free_literals(std::vector<FreeLiteral> f) { free_ = std::move(f); }

  /// Text form that parses back to an equal set.
  std::string to_text() const {
    std::ostringstream os;
    std::string current;
    auto enter = [&](const std::string& g) {
      if (g == current) return;
      os << "[" << g << "]\n";
      current = g;
    };
    for (std::size_t i = 0; i < symbols_.size();) {
      const auto& g = group_.at(symbols_[i]);
      enter(g);
      os << "symbols";
      for (; i < symbols_.size() && group_.at(symbols_[i]) == g; ++i) os << " " << symbols_[i];
      os << "\n";
    }
    for (const auto& c : constraints_) {
      const Term& owner = is_symbol(c.lhs) ? c.lhs : c.rhs;
      if (is_symbol(owner)) enter(group_.at(std::get<std::string>(owner)));
      os << c.to_string() << "\n";
    }
    for (const auto& f : free_) {
      enter(f.group);
      os << "free " << f.value.to_string() << "\n";
    }
    return os.str();
  }

  /*
   * Line syntax:
   *   alpha > alpha_star ~= omega_star > beta    (chains of >, >=, ~=, =, <, <=)
   *   alpha_p > 0                                (literals: integers or p/q)
   *   [publisher]                                (switch group; [] is the default group)
   *   symbols a b c                              (declare without relations)
   *   free 0                                     (free literal in the current group)
   *   # comment
   */
  static OrderingConstraintSet parse(std::string_view text) {
    OrderingConstraintSet out;
    std::string group;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto eol = text.find('\n', pos);
      std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      out.parse_line(line, line_no, group);
    }
    return out;
  }

  friend bool operator==(const OrderingConstraintSet&, const OrderingConstraintSet&) = default;

 private:
  std::vector<OrderConstraint> filter(Relation r) const {
    std::vector<OrderConstraint> out;
    for (const auto& c : constraints_) {
      if (c.rel == r) out.push_back(c);
    }
    return out;
  }

  struct Token {
    std::string text;
    std::size_t column;
    bool is_op;
  };

  static std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> toks;
    std::size_t i = 0;
    auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (i < line.size()) {
      const char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      if (c == '>' || c == '<' || c == '=' || c == '~') {
        if (i + 1 < line.size() && line[i + 1] == '=') ++i;
        std::string op(line.substr(start, i + 1 - start));
        if (op == "~") throw parse_error(line_no, start + 1, "expected '~='");
        toks.push_back({op, start + 1, true});
        ++i;
        continue;
      }
      if (ident_char(c) || c == '-' || c == '+' || c == '/') {
        while (i < line.size() && (ident_char(line[i]) || line[i] == '/' || (i == start && (line[i] == '-' || line[i] == '+')))) ++i;
        toks.push_back({std::string(line.substr(start, i - start)), start + 1, false});
        continue;
      }
      throw parse_error(line_no, start + 1, std::string("unexpected character '") + c + "'");
    }
    return toks;
  }

  static Error parse_error(std::size_t line, std::size_t col, const std::string& msg) {
    return Error(ErrorCode::ParseError,
                 "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  static bool valid_symbol(const std::string& s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
  }

  Term checked_term(const Token& t, std::size_t line_no) const {
    if (t.is_op) throw parse_error(line_no, t.column, "expected a symbol or literal, got '" + t.text + "'");
    if (Rational::is_literal(t.text)) return Rational::parse(t.text);
    if (!valid_symbol(t.text)) throw parse_error(line_no, t.column, "invalid symbol '" + t.text + "'");
    return t.text;
  }

  void parse_line(std::string_view raw, std::size_t line_no, std::string& group) {
    std::string_view line = raw;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) return;
    if (line.front() == '[') {
      if (line.back() != ']') throw parse_error(line_no, line.size(), "unterminated group header");
      group = std::string(line.substr(1, line.size() - 2));
      return;
    }
    auto toks = tokenize(line, line_no);
    if (toks.empty()) return;
    if (!toks[0].is_op && toks[0].text == "symbols") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].is_op || !valid_symbol(toks[i].text)) {
          throw parse_error(line_no, toks[i].column, "invalid symbol '" + toks[i].text + "'");
        }
        declare(toks[i].text, group);
      }
      return;
    }
    if (!toks[0].is_op && toks[0].text == "free") {
      if (toks.size() != 2 || toks[1].is_op || !Rational::is_literal(toks[1].text)) {
        throw parse_error(line_no, toks[0].column, "expected 'free <literal>'");
      }
      add_free_literal(Rational::parse(toks[1].text), group);
      return;
    }
    if (toks.size() < 3 || toks.size() % 2 == 0) {
      throw parse_error(line_no, toks.back().column, "expected a relation chain like 'a > b'");
    }
    for (std::size_t i = 0; i + 2 < toks.size(); i += 2) {
      Term a = checked_term(toks[i], line_no);
      Term b = checked_term(toks[i + 2], line_no);
      const Token& op = toks[i + 1];
      if (!op.is_op) throw parse_error(line_no, op.column, "expected a relation, got '" + op.text + "'");
      if (op.text == ">") add(a, Relation::Greater, b, group);
      else if (op.text == ">=") add(a, Relation::GreaterEq, b, group);
      else if (op.text == "<") add(b, Relation::Greater, a, group);
      else if (op.text == "<=") add(b, Relation::GreaterEq, a, group);
      else if (op.text == "=" || op.text == "==") add(a, Relation::Equal, b, group);
      else if (op.text == "~=") add(a, Relation::Approx, b, group);
      else throw parse_error(line_no, op.column, "unknown relation '" + op.text + "'");
    }
  }

  std::vector<std::string> symbols_;
  std::map<std::string, std::string> group_;
  std::vector<OrderConstraint> constraints_;
  std::vector<FreeLiteral> free_;
};

// ---------------------------------------------------------------------------
// Linear extensions

struct OrderLevel {
  std::vector<std::string> symbols;
  std::optional<Rational> literal;

  friend bool operator==(const OrderLevel&, const OrderLevel&) = default;
};

/// Levels from lowest to highest; symbols sharing a level are tied.
struct ComponentOrder {
  std::vector<OrderLevel> levels;

  friend bool operator==(const ComponentOrder&, const ComponentOrder&) = default;
};

struct LinearExtension {
  std::vector<ComponentOrder> components;
  std::vector<std::pair<std::string, Rational>> pinned;  // symbols fixed equal to a literal
  std::size_t index = 0;

  bool same_order(const LinearExtension& o) const { return components == o.components && pinned == o.pinned; }

  std::string to_string() const {
    std::string out;
    for (std::size_t c = 0; c < components.size(); ++c) {
      if (c) out += " | ";
      const auto& lv = components[c].levels;
      for (std::size_t i = lv.size(); i-- > 0;) {
        std::string cell;
        for (const auto& s : lv[i].symbols) cell += (cell.empty() ? "" : " ~= ") + s;
        if (lv[i].literal) cell += (cell.empty() ? "" : " = ") + lv[i].literal->to_string();
        out += cell;
        if (i) out += " > ";
      }
    }
    return out;
  }
};

struct ValidationResult {
  bool ok = true;
  std::optional<ErrorCode> code;
  std::vector<std::string> path;  // offending cycle, or the conflicting pair
  std::string message;
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

struct Edge {
  std::size_t upper;
  std::size_t lower;
  bool strict;
};

enum : std::uint8_t { kNone = 0, kGe = 1, kGt = 2 };

struct Component {
  std::vector<std::size_t> nodes;             // global node ids, classes first then literals
  std::vector<std::vector<std::uint8_t>> rel;  // rel[a][b]: a >= b (kGe) or a > b (kGt)
};

/*
 * Constraint set compiled into a graph over equality classes and literals.
 * Node ids: unpinned classes (ordered by first member) followed by the
 * distinct literals in ascending order.
 */
struct CompiledOrder {
  std::vector<std::vector<std::string>> class_symbols;
  std::vector<Rational> literals;
  std::vector<Edge> edges;
  std::vector<std::pair<std::string, Rational>> pinned;
  std::map<std::string, std::size_t> node_of_symbol;
  std::vector<Component> components;
  ValidationResult validation;

  std::size_t num_classes() const { return class_symbols.size(); }
  std::size_t num_nodes() const { return class_symbols.size() + literals.size(); }
  bool is_literal(std::size_t node) const { return node >= num_classes(); }
  const Rational& literal(std::size_t node) const { return literals[node - num_classes()]; }

  std::string node_name(std::size_t node) const {
    if (is_literal(node)) return literal(node).to_string();
    std::string s;
    for (const auto& m : class_symbols[node]) s += (s.empty() ? "" : "~") + m;
    return s;
  }

  std::size_t literal_node(const Rational& v) const {
    auto it = std::lower_bound(literals.begin(), literals.end(), v);
    return num_classes() + static_cast<std::size_t>(it - literals.begin());
  }

  std::size_t node_of(const Term& t) const {
    if (is_symbol(t)) return node_of_symbol.at(std::get<std::string>(t));
    return literal_node(std::get<Rational>(t));
  }
};

inline void fail(CompiledOrder& co, ErrorCode code, std::vector<std::string> path, std::string msg) {
  if (!co.validation.ok) return;
  co.validation = {false, code, std::move(path), std::move(msg)};
}

inline bool is_equality(Relation r) { return r == Relation::Equal || r == Relation::Approx; }

inline void find_strict_cycle(CompiledOrder& co, const std::vector<Edge>& edges) {
  const std::size_t n = co.num_nodes();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : edges) adj[e.upper].push_back(e.lower);
  // reach[u][v]: v reachable from u.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::size_t> stack{u};
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : adj[x]) {
        if (!reach[u][y]) {
          reach[u][y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  for (const auto& e : edges) {
    if (!e.strict || !reach[e.lower][e.upper]) continue;
    // Shortest path lower -> upper closes the cycle through the strict edge.
    std::vector<std::size_t> prev(n, n);
    std::vector<std::size_t> queue{e.lower};
    prev[e.lower] = e.lower;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (auto y : adj[queue[qi]]) {
        if (prev[y] == n) {
          prev[y] = queue[qi];
          queue.push_back(y);
        }
      }
    }
    std::vector<std::string> path;
    for (std::size_t x = e.upper; x != e.lower; x = prev[x]) path.push_back(co.node_name(x));
    path.push_back(co.node_name(e.lower));
    std::reverse(path.begin(), path.end());
    path.insert(path.begin(), co.node_name(e.upper));
    std::string msg;
    for (const auto& p : path) msg += (msg.empty() ? "" : " > ") + p;
    fail(co, ErrorCode::CycleDetected, std::move(path), "strict cycle " + msg);
    return;
  }
}

inline CompiledOrder compile(const OrderingConstraintSet& cs) {
  CompiledOrder co;
  const auto& syms = cs.symbols();
  std::map<std::string, std::size_t> sym_index;
  for (std::size_t i = 0; i < syms.size(); ++i) sym_index[syms[i]] = i;

  UnionFind classes(syms.size());
  for (const auto& c : cs.constraints()) {
    if (is_equality(c.rel) && is_symbol(c.lhs) && is_symbol(c.rhs)) {
      classes.unite(sym_index.at(std::get<std::string>(c.lhs)), sym_index.at(std::get<std::string>(c.rhs)));
    }
  }

  std::map<std::size_t, Rational> pin;  // class root -> literal
  std::set<Rational> literal_set;
  for (const auto& c : cs.constraints()) {
    if (!is_symbol(c.lhs)) literal_set.insert(std::get<Rational>(c.lhs));
    if (!is_symbol(c.rhs)) literal_set.insert(std::get<Rational>(c.rhs));
    if (is_equality(c.rel) && is_symbol(c.lhs) != is_symbol(c.rhs)) {
      const auto& s = std::get<std::string>(is_symbol(c.lhs) ? c.lhs : c.rhs);
      const auto& v = std::get<Rational>(is_symbol(c.lhs) ? c.rhs : c.lhs);
      const auto root = classes.find(sym_index.at(s));
      auto [it, inserted] = pin.emplace(root, v);
      if (!inserted && it->second != v) {
        fail(co, ErrorCode::EqualityStrictConflict, {it->second.to_string(), v.to_string()},
             "symbol '" + s + "' equated to two different literals");
      }
    }
    if (!is_symbol(c.lhs) && !is_symbol(c.rhs)) {
      const auto& a = std::get<Rational>(c.lhs);
      const auto& b = std::get<Rational>(c.rhs);
      const bool holds = c.rel == Relation::Greater ? a > b : c.rel == Relation::GreaterEq ? a >= b : a == b;
      if (!holds) {
        if (is_equality(c.rel)) {
          fail(co, ErrorCode::EqualityStrictConflict, {a.to_string(), b.to_string()}, "literals are not equal");
        } else {
          fail(co, ErrorCode::CycleDetected, {a.to_string(), b.to_string(), a.to_string()},
               "literal relation " + c.to_string() + " is false");
        }
      }
    }
  }
  for (const auto& f : cs.free_literals()) literal_set.insert(f.value);
  co.literals.assign(literal_set.begin(), literal_set.end());

  std::map<std::size_t, std::size_t> class_node;  // class root -> node id
  for (std::size_t i = 0; i < syms.size(); ++i) {
    const auto root = classes.find(i);
    if (pin.count(root)) continue;
    if (!class_node.count(root)) {
      class_node[root] = co.class_symbols.size();
      co.class_symbols.emplace_back();
    }
    co.class_symbols[class_node[root]].push_back(syms[i]);
  }
  for (std::size_t i = 0; i < syms.size(); ++i) {
    const auto root = classes.find(i);
    if (auto it = pin.find(root); it != pin.end()) {
      co.pinned.emplace_back(syms[i], it->second);
      co.node_of_symbol[syms[i]] = co.literal_node(it->second);
    } else {
      co.node_of_symbol[syms[i]] = class_node[root];
    }
  }

  for (const auto& c : cs.constraints()) {
    if (is_equality(c.rel)) continue;
    const auto u = co.node_of(c.lhs);
    const auto v = co.node_of(c.rhs);
    if (u == v) {
      if (c.rel == Relation::Greater) {
        fail(co, ErrorCode::EqualityStrictConflict, {term_to_string(c.lhs), term_to_string(c.rhs)},
             "'" + c.to_string() + "' contradicts an equality");
      }
      continue;
    }
    co.edges.push_back({u, v, c.rel == Relation::Greater});
  }

  std::vector<Edge> all_edges = co.edges;
  for (std::size_t i = 1; i < co.literals.size(); ++i) {
    all_edges.push_back({co.num_classes() + i, co.num_classes() + i - 1, true});
  }
  find_strict_cycle(co, all_edges);
  if (!co.validation.ok) return co;

  // Components over classes: same declared group, or linked by a relation.
  UnionFind comp(co.num_classes());
  std::map<std::string, std::size_t> group_rep;
  for (std::size_t n = 0; n < co.num_classes(); ++n) {
    for (const auto& s : co.class_symbols[n]) {
      auto [it, inserted] = group_rep.emplace(cs.group_of(s), n);
      if (!inserted) comp.unite(it->second, n);
    }
  }
  for (const auto& e : co.edges) {
    if (!co.is_literal(e.upper) && !co.is_literal(e.lower)) comp.unite(e.upper, e.lower);
  }
  std::map<std::size_t, std::set<std::size_t>> members;  // root -> node ids
  for (std::size_t n = 0; n < co.num_classes(); ++n) members[comp.find(n)].insert(n);
  for (const auto& e : co.edges) {
    if (co.is_literal(e.upper) && !co.is_literal(e.lower)) members[comp.find(e.lower)].insert(e.upper);
    if (co.is_literal(e.lower) && !co.is_literal(e.upper)) members[comp.find(e.upper)].insert(e.lower);
  }
  for (const auto& f : cs.free_literals()) {
    if (auto it = group_rep.find(f.group); it != group_rep.end()) {
      members[comp.find(it->second)].insert(co.literal_node(f.value));
    }
  }

  for (const auto& [root, nodes] : members) {
    Component c;
    c.nodes.assign(nodes.begin(), nodes.end());
    const std::size_t k = c.nodes.size();
    if (k > 63) throw Error(ErrorCode::ExtensionLimitExceeded, "component with more than 63 nodes");
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < k; ++i) local[c.nodes[i]] = i;
    c.rel.assign(k, std::vector<std::uint8_t>(k, kNone));
    for (const auto& e : all_edges) {
      auto a = local.find(e.upper);
      auto b = local.find(e.lower);
      if (a == local.end() || b == local.end()) continue;
      auto& r = c.rel[a->second][b->second];
      r = std::max<std::uint8_t>(r, e.strict ? kGt : kGe);
    }
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t i = 0; i < k; ++i) {
        if (!c.rel[i][m]) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (!c.rel[m][j] || i == j) continue;
          const std::uint8_t via = std::max(c.rel[i][m], c.rel[m][j]);
          c.rel[i][j] = std::max(c.rel[i][j], via);
        }
      }
    }
    co.components.push_back(std::move(c));
  }
  return co;
}

inline OrderLevel make_level(const CompiledOrder& co, const Component& c, const std::vector<std::size_t>& locals) {
  OrderLevel lv;
  for (auto l : locals) {
    const auto node = c.nodes[l];
    if (co.is_literal(node)) {
      lv.literal = co.literal(node);
    } else {
      const auto& ms = co.class_symbols[node];
      lv.symbols.insert(lv.symbols.end(), ms.begin(), ms.end());
    }
  }
  return lv;
}

// Total orders (with ties only where a >= relation permits them) of one
// component, bottom level first, in deterministic order.
inline std::vector<ComponentOrder> component_orders(const CompiledOrder& co, const Component& c,
                                                    std::size_t limit) {
  const std::size_t k = c.nodes.size();
  std::vector<ComponentOrder> out;
  std::vector<std::vector<std::size_t>> levels;
  const std::uint64_t all = k == 64 ? ~0ULL : ((1ULL << k) - 1);

  auto tie_ok = [&](std::size_t a, std::size_t b) {
    return c.rel[a][b] != kGt && c.rel[b][a] != kGt && (c.rel[a][b] == kGe || c.rel[b][a] == kGe);
  };

  std::function<void(std::uint64_t)> rec = [&](std::uint64_t placed) {
    if (placed == all) {
      ComponentOrder order;
      for (const auto& lv : levels) order.levels.push_back(make_level(co, c, lv));
      out.push_back(std::move(order));
      if (out.size() > limit) {
        throw Error(ErrorCode::ExtensionLimitExceeded,
                    "more than " + std::to_string(limit) + " linear extensions");
      }
      return;
    }
    std::vector<std::size_t> pool;
    for (std::size_t a = 0; a < k; ++a) {
      if (placed >> a & 1ULL) continue;
      bool ready = true;
      for (std::size_t b = 0; b < k && ready; ++b) {
        if (c.rel[a][b] == kGt && !(placed >> b & 1ULL)) ready = false;
      }
      if (ready) pool.push_back(a);
    }
    for (std::size_t size = 1; size <= pool.size(); ++size) {
      for (const auto& combo : combinations(pool.size(), size)) {
        std::vector<std::size_t> level;
        std::uint64_t mask = 0;
        for (auto i : combo) {
          level.push_back(pool[i]);
          mask |= 1ULL << pool[i];
        }
        bool ok = true;
        for (std::size_t i = 0; i < level.size() && ok; ++i) {
          const auto a = level[i];
          for (std::size_t b = 0; b < k && ok; ++b) {
            if (c.rel[a][b] == kGe && !((placed | mask) >> b & 1ULL)) ok = false;
          }
          for (std::size_t j = i + 1; j < level.size() && ok; ++j) ok = tie_ok(a, level[j]);
        }
        if (!ok) continue;
        levels.push_back(std::move(level));
        rec(placed | mask);
        levels.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

inline void require_valid(const CompiledOrder& co) {
  if (!co.validation.ok) throw Error(*co.validation.code, co.validation.message);
}

}  // namespace detail

inline ValidationResult validate(const OrderingConstraintSet& cs) { return detail::compile(cs).validation; }

/// Per-component orders; the extensions are their cartesian product.
inline std::vector<std::vector<ComponentOrder>> component_extensions(const OrderingConstraintSet& cs,
                                                                     std::size_t limit = 100000) {
  const auto co = detail::compile(cs);
  detail::require_valid(co);
  std::vector<std::vector<ComponentOrder>> out;
  std::size_t total = 1;
  for (const auto& c : co.components) {
    out.push_back(detail::component_orders(co, c, limit));
    total *= out.back().size();
    if (total > limit) {
      throw Error(ErrorCode::ExtensionLimitExceeded, "more than " + std::to_string(limit) + " linear extensions");
    }
  }
  return out;
}

inline std::vector<std::pair<std::string, Rational>> pinned_symbols(const OrderingConstraintSet& cs) {
  return detail::compile(cs).pinned;
}

/// All linear extensions; the first component varies slowest.
inline std::vector<LinearExtension> linear_extensions(const OrderingConstraintSet& cs, std::size_t limit = 100000) {
  const auto per = component_extensions(cs, limit);
  const auto pinned = pinned_symbols(cs);
  std::vector<LinearExtension> out;
  std::vector<std::size_t> idx(per.size(), 0);
  for (;;) {
    LinearExtension e;
    for (std::size_t c = 0; c < per.size(); ++c) e.components.push_back(per[c][idx[c]]);
    e.pinned = pinned;
    e.index = out.size();
    out.push_back(std::move(e));
    std::size_t c = per.size();
    while (c > 0) {
      --c;
      if (++idx[c] < per[c].size()) break;
      idx[c] = 0;
      if (c == 0) return out;
    }
    if (per.empty()) return out;
  }
}

inline std::size_t count_linear_extensions(const OrderingConstraintSet& cs, std::size_t limit = 100000) {
  std::size_t total = 1;
  for (const auto& c : component_extensions(cs, limit)) total *= c.size();
  return total;
}

namespace detail {

template <typename Assign>
inline void assign_runs(const ComponentOrder& order, Instantiation& out, Assign&& run_values) {
  const auto& lv = order.levels;
  std::size_t i = 0;
  std::optional<Rational> lo;
  while (i < lv.size()) {
    if (lv[i].literal) {
      for (const auto& s : lv[i].symbols) out[s] = *lv[i].literal;
      lo = lv[i].literal;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < lv.size() && !lv[j].literal) ++j;
    std::optional<Rational> hi;
    if (j < lv.size()) hi.emplace(*lv[j].literal);
    const std::vector<Rational> vals = run_values(i, j - i, lo, hi);
    for (std::size_t t = i; t < j; ++t) {
      for (const auto& s : lv[t].symbols) out[s] = vals[t - i];
    }
    i = j;
  }
}

}  // namespace detail

/// Rank-based values: a level's value is its 1-based position within its
/// component; literals keep their value and adjacent runs shift to stay
/// strictly on the correct side.
inline Instantiation canonical_instantiation(const LinearExtension& e) {
  Instantiation out;
  for (const auto& comp : e.components) {
    detail::assign_runs(comp, out,
                        [](std::size_t first, std::size_t k, const std::optional<Rational>& lo,
                           const std::optional<Rational>& hi) {
                          std::vector<Rational> v;
                          std::optional<Rational> prev = lo;
                          for (std::size_t t = 0; t < k; ++t) {
                            Rational pos(static_cast<std::int64_t>(first + t + 1));
                            if (prev && pos <= *prev) pos = *prev + 1;
                            v.push_back(pos);
                            prev = pos;
                          }
                          if (hi && k > 0 && v.back() >= *hi) {
                            const auto kk = static_cast<std::int64_t>(k);
                            for (std::size_t t = 0; t < k; ++t) {
                              const auto tt = static_cast<std::int64_t>(t);
                              v[t] = lo ? *lo + (*hi - *lo) * Rational(tt + 1, kk + 1) : *hi - Rational(kk - tt);
                            }
                          }
                          return v;
                        });
  }
  for (const auto& [s, v] : e.pinned) out[s] = v;
  return out;
}

namespace detail {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

inline Rational random_gap(std::mt19937_64& rng) {
  return Rational(static_cast<std::int64_t>(draw(rng, 1, 9)), static_cast<std::int64_t>(draw(rng, 1, 3)));
}

}  // namespace detail

/// Random values with random positive gaps, inducing exactly `e`.
inline Instantiation sample_instantiation_for(const LinearExtension& e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instantiation out;
  for (const auto& comp : e.components) {
    detail::assign_runs(comp, out,
                        [&](std::size_t, std::size_t k, const std::optional<Rational>& lo,
                            const std::optional<Rational>& hi) {
                          std::vector<Rational> v(k);
                          if (k == 0) return v;
                          if (lo && hi) {
                            std::vector<std::int64_t> w(k + 1);
                            std::int64_t total = 0;
                            for (auto& x : w) total += (x = static_cast<std::int64_t>(detail::draw(rng, 1, 8)));
                            std::int64_t cum = 0;
                            const Rational base = lo.value_or(Rational(0));
                            const Rational span = hi.value_or(Rational(0)) - base;
                            for (std::size_t t = 0; t < k; ++t) {
                              cum += w[t];
                              v[t] = base + span * Rational(cum, total);
                            }
                          } else if (hi) {
                            Rational x = *hi;
                            for (std::size_t t = k; t-- > 0;) v[t] = x = x - detail::random_gap(rng);
                          } else {
                            Rational x = lo ? *lo : Rational(static_cast<std::int64_t>(detail::draw(rng, 0, 6)) - 3);
                            for (std::size_t t = 0; t < k; ++t) {
                              if (lo || t > 0) x = x + detail::random_gap(rng);
                              v[t] = x;
                            }
                          }
                          return v;
                        });
  }
  for (const auto& [s, v] : e.pinned) out[s] = v;
  return out;
}

/// Random extension (uniform per component) then random values along it.
inline Instantiation sample_instantiation(const OrderingConstraintSet& cs, std::uint64_t seed,
                                          std::size_t limit = 100000) {
  const auto per = component_extensions(cs, limit);
  std::mt19937_64 rng(seed);
  LinearExtension e;
  for (const auto& orders : per) e.components.push_back(orders[detail::draw(rng, 0, orders.size() - 1)]);
  e.pinned = pinned_symbols(cs);
  return sample_instantiation_for(e, rng());
}

inline bool holds(const OrderConstraint& c, const Instantiation& inst) {
  auto value = [&](const Term& t) -> Rational {
    if (!is_symbol(t)) return std::get<Rational>(t);
    auto it = inst.find(std::get<std::string>(t));
    if (it == inst.end()) throw Error(ErrorCode::MissingSymbol, "no value for '" + std::get<std::string>(t) + "'");
    return it->second;
  };
  const Rational a = value(c.lhs);
  const Rational b = value(c.rhs);
  switch (c.rel) {
    case Relation::Greater: return a > b;
    case Relation::GreaterEq: return a >= b;
    case Relation::Equal:
    case Relation::Approx: return a == b;
  }
  return false;
}

/// Exact check of every relation (all symbols must be assigned).
inline bool satisfies(const OrderingConstraintSet& cs, const Instantiation& inst) {
  for (const auto& s : cs.symbols()) {
    if (!inst.count(s)) return false;
  }
  return std::all_of(cs.constraints().begin(), cs.constraints().end(),
                     [&](const auto& c) { return holds(c, inst); });
}

/// The extension whose order `inst` realizes, or nullopt when `inst`
/// violates a relation or ties symbols no >= relation allows to tie.
inline std::optional<LinearExtension> induced_extension(const OrderingConstraintSet& cs, const Instantiation& inst) {
  if (!satisfies(cs, inst)) return std::nullopt;
  const auto co = detail::compile(cs);
  detail::require_valid(co);
  LinearExtension e;
  for (const auto& c : co.components) {
    std::vector<std::pair<Rational, std::size_t>> vals;
    for (std::size_t l = 0; l < c.nodes.size(); ++l) {
      const auto node = c.nodes[l];
      vals.emplace_back(co.is_literal(node) ? co.literal(node) : inst.at(co.class_symbols[node].front()), l);
    }
    std::stable_sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ComponentOrder order;
    for (std::size_t i = 0; i < vals.size();) {
      std::size_t j = i;
      std::vector<std::size_t> level;
      while (j < vals.size() && vals[j].first == vals[i].first) level.push_back(vals[j++].second);
      std::sort(level.begin(), level.end());
      for (std::size_t a = 0; a < level.size(); ++a) {
        for (std::size_t b = a + 1; b < level.size(); ++b) {
          const auto x = level[a];
          const auto y = level[b];
          const bool ok = c.rel[x][y] != detail::kGt && c.rel[y][x] != detail::kGt &&
                          (c.rel[x][y] == detail::kGe || c.rel[y][x] == detail::kGe);
          if (!ok) return std::nullopt;
        }
      }
      order.levels.push_back(detail::make_level(co, c, level));
      i = j;
    }
    e.components.push_back(std::move(order));
  }
  e.pinned = co.pinned;
  return e;
}

/// Replaces each `~=` between symbols by the two strict orientations; 2^k sets.
inline std::vector<OrderingConstraintSet> epsilon_split(const OrderingConstraintSet& cs) {
  std::vector<OrderingConstraintSet> out{cs};
  for (std::size_t i = 0; i < cs.constraints().size(); ++i) {
    const auto& c = cs.constraints()[i];
    if (c.rel != Relation::Approx || !is_symbol(c.lhs) || !is_symbol(c.rhs)) continue;
    std::vector<OrderingConstraintSet> next;
    for (const auto& base : out) {
      for (bool forward : {true, false}) {
        auto cons = base.constraints();
        cons[i] = forward ? OrderConstraint{c.lhs, Relation::Greater, c.rhs}
                          : OrderConstraint{c.rhs, Relation::Greater, c.lhs};
        auto variant = base;
        variant.set_constraints(std::move(cons));
        next.push_back(std::move(variant));
      }
    }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic games and universal checks

struct SymbolicCell {
  Term row;
  Term col;

  friend bool operator==(const SymbolicCell&, const SymbolicCell&) = default;
};

/// Strategic-form game whose cells hold payoff symbols or literals.
class SymbolicGame {
 public:
  static SymbolicGame make(std::string row_label, std::string col_label, std::vector<std::string> row_strategies,
                           std::vector<std::string> col_strategies, std::vector<std::vector<SymbolicCell>> cells) {
    PayoffMatrix shape;
    for (const auto& line : cells) shape.emplace_back(line.size());
    // Reuses the concrete game's dimension and label checks.
    (void)NormalFormGame::make(row_label, col_label, row_strategies, col_strategies, std::move(shape));
    SymbolicGame g;
    g.row_label_ = std::move(row_label);
    g.col_label_ = std::move(col_label);
    g.row_strategies_ = std::move(row_strategies);
    g.col_strategies_ = std::move(col_strategies);
    g.cells_ = std::move(cells);
    return g;
  }

  const std::string& row_label() const noexcept { return row_label_; }
  const std::string& col_label() const noexcept { return col_label_; }
  const std::vector<std::string>& strategies(Player p) const noexcept {
    return p == Player::Row ? row_strategies_ : col_strategies_;
  }
  std::size_t rows() const noexcept { return row_strategies_.size(); }
  std::size_t cols() const noexcept { return col_strategies_.size(); }
  const std::vector<std::vector<SymbolicCell>>& cells() const noexcept { return cells_; }

  std::vector<std::string> symbols() const {
    std::vector<std::string> out;
    for (const auto& line : cells_) {
      for (const auto& cell : line) {
        for (const Term* t : {&cell.row, &cell.col}) {
          if (is_symbol(*t) && std::find(out.begin(), out.end(), std::get<std::string>(*t)) == out.end()) {
            out.push_back(std::get<std::string>(*t));
          }
        }
      }
    }
    return out;
  }

  NormalFormGame instantiate(const Instantiation& values) const {
    auto value = [&](const Term& t) -> Rational {
      if (!is_symbol(t)) return std::get<Rational>(t);
      auto it = values.find(std::get<std::string>(t));
      if (it == values.end()) throw Error(ErrorCode::MissingSymbol, "no value for symbol '" + std::get<std::string>(t) + "'");
      return it->second;
    };
    PayoffMatrix m;
    for (const auto& line : cells_) {
      std::vector<Payoff> row;
      for (const auto& cell : line) row.push_back({value(cell.row), value(cell.col)});
      m.push_back(std::move(row));
    }
    return NormalFormGame::make(row_label_, col_label_, row_strategies_, col_strategies_, std::move(m));
  }

  friend bool operator==(const SymbolicGame&, const SymbolicGame&) = default;

 private:
  SymbolicGame() = default;

  std::string row_label_;
  std::string col_label_;
  std::vector<std::string> row_strategies_;
  std::vector<std::string> col_strategies_;
  std::vector<std::vector<SymbolicCell>> cells_;
};

struct ProfileIsPureNash {
  StrategyProfile profile;
};
struct IedsReducesTo {
  IedsPolicy policy;
  StrategyProfile profile;
};
struct StrategyDominated {
  Player player = Player::Row;
  std::size_t strategy = 0;
  DominanceKind kind = DominanceKind::Weak;
  std::optional<std::size_t> dominator;  // any dominator when empty
};
struct ProfileParetoOptimal {
  StrategyProfile profile;
};
struct Mixed2x2EquilibriumEquals {
  Rational p;
  Rational q;
};

using OrdinalPredicate =
    std::variant<ProfileIsPureNash, IedsReducesTo, StrategyDominated, ProfileParetoOptimal, Mixed2x2EquilibriumEquals>;

inline bool evaluate(const NormalFormGame& game, const OrdinalPredicate& pred) {
  return std::visit(
      [&](const auto& p) -> bool {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ProfileIsPureNash>) {
          return is_pure_nash(game, p.profile);
        } else if constexpr (std::is_same_v<P, IedsReducesTo>) {
          const auto reduced = ieds(game, p.policy).reduced();
          return reduced.rows() == 1 && reduced.cols() == 1 &&
                 reduced.strategy_label(Player::Row, 0) == game.strategy_label(Player::Row, p.profile.row) &&
                 reduced.strategy_label(Player::Col, 0) == game.strategy_label(Player::Col, p.profile.col);
        } else if constexpr (std::is_same_v<P, StrategyDominated>) {
          if (p.dominator) return dominates(game, p.player, *p.dominator, p.strategy, p.kind);
          const auto v = dominated_strategies(game, p.player, p.kind);
          game.check_index(p.player, p.strategy);
          return v[p.strategy].kind != DominanceStatus::NotDominated;
        } else if constexpr (std::is_same_v<P, ProfileParetoOptimal>) {
          return pareto_status(game, p.profile).optimal();
        } else {
          const auto eqs = mixed_2x2(game);
          return eqs.size() == 1 && eqs.front().profile == MixedProfile{{p.p, 1 - p.p}, {p.q, 1 - p.q}};
        }
      },
      pred);
}

inline std::string describe(const SymbolicGame& g, const OrdinalPredicate& pred) {
  auto prof = [&](StrategyProfile s) {
    return "(" + g.strategies(Player::Row).at(s.row) + "," + g.strategies(Player::Col).at(s.col) + ")";
  };
  return std::visit(
      [&](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ProfileIsPureNash>) {
          return prof(p.profile) + " is a pure Nash equilibrium";
        } else if constexpr (std::is_same_v<P, IedsReducesTo>) {
          return std::string(to_string(p.policy.kind)) + " IEDS (" + to_string(p.policy.order) + ") reduces to " +
                 prof(p.profile);
        } else if constexpr (std::is_same_v<P, StrategyDominated>) {
          const auto& s = g.strategies(p.player);
          return std::string(to_string(p.player)) + " strategy " + s.at(p.strategy) + " is " +
                 (p.kind == DominanceKind::Strict ? "strictly" : "weakly") + " dominated" +
                 (p.dominator ? " by " + s.at(*p.dominator) : std::string());
        } else if constexpr (std::is_same_v<P, ProfileParetoOptimal>) {
          return prof(p.profile) + " is Pareto optimal";
        } else {
          return "unique 2x2 equilibrium is p=" + p.p.to_string() + ", q=" + p.q.to_string();
        }
      },
      pred);
}

struct HoldsForAllOptions {
  std::size_t limit = 100000;
  std::size_t threads = 1;
  std::vector<OrderConstraint> condition;  // only extensions satisfying these are checked
  std::size_t samples_per_extension = 16;  // used only where the predicate is cardinal
  std::uint64_t seed = 0;
};

enum class UniversalVerdict { HoldsForAll, Counterexample };

struct UniversalResult {
  UniversalVerdict verdict = UniversalVerdict::HoldsForAll;
  std::optional<Instantiation> counterexample;
  std::optional<std::size_t> extension_index;
  bool exhaustive = true;  // false when some extension was only sampled
  std::size_t extensions_checked = 0;

  bool holds() const noexcept { return verdict == UniversalVerdict::HoldsForAll; }
};

/// Outcome of checking one extension: nullopt when it holds, otherwise the
/// failing instantiation. `sampled` is set when the check relied on samples.
struct ExtensionOutcome {
  std::optional<Instantiation> failure;
  bool sampled = false;
};

/*
 * Evaluates `check` once per linear extension (skipping extensions whose
 * canonical instantiation violates options.condition). Extensions may be
 * checked on several threads; the reported counterexample is always the one
 * with the lowest extension index.
 */
inline UniversalResult check_all_extensions(
    const OrderingConstraintSet& cs, const std::function<ExtensionOutcome(const LinearExtension&)>& check,
    const HoldsForAllOptions& options = {}) {
  const auto exts = linear_extensions(cs, options.limit);
  std::vector<char> skipped(exts.size(), 0);
  std::vector<ExtensionOutcome> outcomes(exts.size());
  auto work = [&](std::size_t i) {
    const auto canon = canonical_instantiation(exts[i]);
    for (const auto& c : options.condition) {
      if (!holds(c, canon)) {
        skipped[i] = 1;
        return;
      }
    }
    outcomes[i] = check(exts[i]);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, exts.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < exts.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < exts.size(); i += threads) work(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  UniversalResult r;
  for (std::size_t i = 0; i < exts.size(); ++i) {
    if (skipped[i]) continue;
    ++r.extensions_checked;
    if (outcomes[i].sampled) r.exhaustive = false;
    if (outcomes[i].failure && r.holds()) {
      r.verdict = UniversalVerdict::Counterexample;
      r.counterexample = outcomes[i].failure;
      r.extension_index = i;
    }
  }
  return r;
}

namespace detail {

inline bool has_dominant_strategy(const NormalFormGame& g) {
  for (Player p : {Player::Row, Player::Col}) {
    for (std::size_t a = 0; a < g.num_strategies(p); ++a) {
      bool dom = true;
      for (std::size_t b = 0; b < g.num_strategies(p) && dom; ++b) {
        if (a != b && !dominates(g, p, a, b, DominanceKind::Weak)) dom = false;
      }
      if (dom) return true;
    }
  }
  return false;
}

inline void check_predicate_shape(const SymbolicGame& g, const OrdinalPredicate& pred) {
  auto in = [&](StrategyProfile s) {
    if (s.row >= g.rows() || s.col >= g.cols()) throw Error(ErrorCode::IndexOutOfBounds, "profile out of range");
  };
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, StrategyDominated>) {
          const auto n = g.strategies(p.player).size();
          if (p.strategy >= n || (p.dominator && *p.dominator >= n)) {
            throw Error(ErrorCode::IndexOutOfBounds, "strategy index out of range");
          }
        } else if constexpr (std::is_same_v<P, Mixed2x2EquilibriumEquals>) {
          if (g.rows() != 2 || g.cols() != 2) throw Error(ErrorCode::ShapeError, "mixed predicate needs a 2x2 game");
        } else {
          in(p.profile);
        }
      },
      pred);
}

}  // namespace detail

/*
 * Checks `pred` on the canonical instantiation of every linear extension.
 * The pure, dominance, IEDS and Pareto predicates depend only on payoff
 * order, so this is exhaustive. The mixed 2x2 predicate is order-determined
 * only when some player has a weakly dominant strategy; elsewhere it is also
 * checked on sampled instantiations and the result is marked non-exhaustive.
 */
inline UniversalResult holds_for_all(const SymbolicGame& game, const OrderingConstraintSet& cs,
                                     const OrdinalPredicate& pred, const HoldsForAllOptions& options = {}) {
  for (const auto& s : game.symbols()) {
    if (!cs.has_symbol(s)) throw Error(ErrorCode::MissingSymbol, "symbol '" + s + "' has no constraints entry");
  }
  detail::check_predicate_shape(game, pred);
  const bool cardinal = std::holds_alternative<Mixed2x2EquilibriumEquals>(pred);
  return check_all_extensions(
      cs,
      [&](const LinearExtension& e) {
        ExtensionOutcome out;
        auto inst = canonical_instantiation(e);
        const auto g = game.instantiate(inst);
        if (!evaluate(g, pred)) {
          out.failure = std::move(inst);
          return out;
        }
        if (!cardinal || detail::has_dominant_strategy(g)) return out;
        out.sampled = true;
        for (std::size_t s = 0; s < options.samples_per_extension; ++s) {
          auto sample = sample_instantiation_for(e, options.seed * 1000003ULL + e.index * 7919ULL + s);
          if (!evaluate(game.instantiate(sample), pred)) {
            out.failure = std::move(sample);
            break;
          }
        }
        return out;
      },
      options);
}

}  // namespace ordgame
