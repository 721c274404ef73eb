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

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordgame/error.hpp"
#include "ordgame/game.hpp"
#include "ordgame/models.hpp"
#include "ordgame/ordinal.hpp"

namespace ordgame {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class ScenarioKind { Concrete, Symbolic, Besancenot };

constexpr const char* to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Concrete: return "concrete";
    case ScenarioKind::Symbolic: return "symbolic";
    case ScenarioKind::Besancenot: return "besancenot";
  }
  return "?";
}

struct ScenarioOptions {
  std::optional<IedsPolicy> ieds;
  bool nonnegativity = true;
  std::uint64_t seed = 0;

  friend bool operator==(const ScenarioOptions&, const ScenarioOptions&) = default;
};

struct Scenario {
  std::string name;
  ScenarioKind kind = ScenarioKind::Concrete;
  std::optional<NormalFormGame> game;              // concrete
  std::optional<SymbolicGame> symbolic;            // symbolic
  std::optional<OrderingConstraintSet> constraints;  // symbolic
  std::optional<BesancenotParams> besancenot;      // besancenot
  ScenarioOptions options;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

namespace detail {

[[noreturn]] inline void scenario_error(const std::string& where, const std::string& msg) {
  throw Error(ErrorCode::ParseError, where + ": " + msg);
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) scenario_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) scenario_error(where, std::string("missing field '") + key + "'");
  return *it;
}

inline void only_fields(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; })) {
      scenario_error(where, "unknown field '" + it.key() + "'");
    }
  }
}

inline Rational rational_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!Rational::is_literal(s)) scenario_error(where, "'" + s + "' is not an integer or p/q rational");
    return Rational::parse(s);
  }
  scenario_error(where, "expected an integer or a \"p/q\" string");
}

inline Term term_from(const Json& j, const std::string& where) {
  if (j.is_string() && !Rational::is_literal(j.get<std::string>())) {
    const auto s = j.get<std::string>();
    if (s.empty()) scenario_error(where, "empty symbol");
    return s;
  }
  return rational_from(j, where);
}

inline std::vector<std::string> labels_from(const Json& j, const std::string& where) {
  if (!j.is_array()) scenario_error(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) scenario_error(where + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline const char* order_name(PlayerOrder o) {
  switch (o) {
    case PlayerOrder::RowFirst: return "row_first";
    case PlayerOrder::ColFirst: return "col_first";
    case PlayerOrder::Alternating: return "alternating";
  }
  return "?";
}

}  // namespace detail

inline PlayerOrder parse_player_order(const std::string& s) {
  if (s == "row_first" || s == "row-first") return PlayerOrder::RowFirst;
  if (s == "col_first" || s == "col-first") return PlayerOrder::ColFirst;
  if (s == "alternating") return PlayerOrder::Alternating;
  throw Error(ErrorCode::ParseError, "unknown elimination order '" + s + "'");
}

inline DominanceKind parse_dominance_kind(const std::string& s) {
  if (s == "weak") return DominanceKind::Weak;
  if (s == "strict") return DominanceKind::Strict;
  throw Error(ErrorCode::ParseError, "unknown dominance kind '" + s + "'");
}

/*
 * Scenario document (schema_version 1):
 *   { "schema_version": 1, "name": ..., "kind": "concrete" | "symbolic" | "besancenot",
 *     "game": { "players": [row, col], "strategies": [[...], [...]],
 *               "payoffs": [[[row, col], ...], ...] },
 *     "constraints": [lines...],   // symbolic only
 *     "params": {...},             // besancenot only
 *     "options": { "ieds": {"kind", "order"}, "nonnegativity", "seed" } }
 */
inline Scenario parse_scenario(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::string what = e.what();
    const auto pos = what.find(": ");
    throw Error(ErrorCode::ParseError, detail::line_col(text, e.byte) + ": " +
                                           (pos == std::string::npos ? what : what.substr(pos + 2)));
  }
  using detail::field;
  detail::only_fields(doc, {"schema_version", "name", "kind", "game", "constraints", "params", "options"}, "scenario");
  const auto& ver = field(doc, "schema_version", "scenario");
  if (!ver.is_number_integer() || ver.get<int>() != kSchemaVersion) {
    detail::scenario_error("schema_version", "unsupported version (expected 1)");
  }
  Scenario sc;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) detail::scenario_error("name", "expected a string");
    sc.name = doc["name"].get<std::string>();
  }
  const auto& kind = field(doc, "kind", "scenario");
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  if (k == "concrete") sc.kind = ScenarioKind::Concrete;
  else if (k == "symbolic") sc.kind = ScenarioKind::Symbolic;
  else if (k == "besancenot") sc.kind = ScenarioKind::Besancenot;
  else detail::scenario_error("kind", "expected \"concrete\", \"symbolic\" or \"besancenot\"");

  if (sc.kind == ScenarioKind::Besancenot) {
    const auto& p = field(doc, "params", "scenario");
    detail::only_fields(p, {"mu", "theta_h", "theta_l", "lambda_w", "delta_a", "delta_t", "c", "phi", "belief_a", "belief_t"},
                        "params");
    auto get = [&](const char* key) { return detail::rational_from(field(p, key, "params"), std::string("params.") + key); };
    BesancenotParams b;
    b.mu = get("mu");
    b.theta_h = get("theta_h");
    b.theta_l = get("theta_l");
    b.lambda_w = get("lambda_w");
    b.delta_a = get("delta_a");
    b.delta_t = get("delta_t");
    b.c = get("c");
    b.phi = get("phi");
    if (p.contains("belief_a")) b.belief_a = get("belief_a");
    if (p.contains("belief_t")) b.belief_t = get("belief_t");
    b.validate();
    sc.besancenot = b;
  } else {
    const auto& g = field(doc, "game", "scenario");
    detail::only_fields(g, {"players", "strategies", "payoffs"}, "game");
    const auto players = detail::labels_from(field(g, "players", "game"), "game.players");
    if (players.size() != 2) detail::scenario_error("game.players", "expected two player labels");
    const auto& strat = field(g, "strategies", "game");
    if (!strat.is_array() || strat.size() != 2) detail::scenario_error("game.strategies", "expected two label arrays");
    const auto rows = detail::labels_from(strat[0], "game.strategies[0]");
    const auto cols = detail::labels_from(strat[1], "game.strategies[1]");
    const auto& pay = field(g, "payoffs", "game");
    if (!pay.is_array()) detail::scenario_error("game.payoffs", "expected an array of rows");
    std::vector<std::vector<std::pair<Term, Term>>> cells;
    for (std::size_t r = 0; r < pay.size(); ++r) {
      const std::string wr = "game.payoffs[" + std::to_string(r) + "]";
      if (!pay[r].is_array()) detail::scenario_error(wr, "expected an array of cells");
      auto& line = cells.emplace_back();
      for (std::size_t c = 0; c < pay[r].size(); ++c) {
        const std::string wc = wr + "[" + std::to_string(c) + "]";
        const auto& cell = pay[r][c];
        if (!cell.is_array() || cell.size() != 2) detail::scenario_error(wc, "expected [row payoff, column payoff]");
        if (sc.kind == ScenarioKind::Concrete) {
          line.emplace_back(detail::rational_from(cell[0], wc + "[0]"), detail::rational_from(cell[1], wc + "[1]"));
        } else {
          line.emplace_back(detail::term_from(cell[0], wc + "[0]"), detail::term_from(cell[1], wc + "[1]"));
        }
      }
    }
    if (sc.kind == ScenarioKind::Concrete) {
      PayoffMatrix m;
      for (const auto& line : cells) {
        auto& out = m.emplace_back();
        for (const auto& [a, b] : line) out.push_back({std::get<Rational>(a), std::get<Rational>(b)});
      }
      sc.game = NormalFormGame::make(players[0], players[1], rows, cols, std::move(m));
    } else {
      std::vector<std::vector<SymbolicCell>> m;
      for (const auto& line : cells) {
        auto& out = m.emplace_back();
        for (const auto& [a, b] : line) out.push_back({a, b});
      }
      sc.symbolic = SymbolicGame::make(players[0], players[1], rows, cols, std::move(m));
      const auto& cs = field(doc, "constraints", "scenario");
      std::string body;
      if (cs.is_string()) {
        body = cs.get<std::string>();
      } else if (cs.is_array()) {
        for (const auto& l : detail::labels_from(cs, "constraints")) body += l + "\n";
      } else {
        detail::scenario_error("constraints", "expected a string or an array of lines");
      }
      try {
        sc.constraints = OrderingConstraintSet::parse(body);
      } catch (const Error& e) {
        const std::string what = e.what();
        detail::scenario_error("constraints", what.substr(to_string(e.code()).size() + 2));
      }
      for (const auto& s : sc.symbolic->symbols()) {
        if (!sc.constraints->has_symbol(s)) {
          throw Error(ErrorCode::MissingSymbol, "symbol '" + s + "' is used in the game but not in the constraints");
        }
      }
    }
  }

  if (doc.contains("options")) {
    const auto& o = doc["options"];
    detail::only_fields(o, {"ieds", "nonnegativity", "seed"}, "options");
    if (o.contains("ieds")) {
      const auto& i = o["ieds"];
      detail::only_fields(i, {"kind", "order"}, "options.ieds");
      IedsPolicy p;
      try {
        if (i.contains("kind")) p.kind = parse_dominance_kind(i["kind"].get<std::string>());
        if (i.contains("order")) p.order = parse_player_order(i["order"].get<std::string>());
      } catch (const nlohmann::json::exception&) {
        detail::scenario_error("options.ieds", "kind and order must be strings");
      }
      sc.options.ieds = p;
    }
    if (o.contains("nonnegativity")) {
      if (!o["nonnegativity"].is_boolean()) detail::scenario_error("options.nonnegativity", "expected true or false");
      sc.options.nonnegativity = o["nonnegativity"].get<bool>();
    }
    if (o.contains("seed")) {
      if (!o["seed"].is_number_unsigned()) detail::scenario_error("options.seed", "expected a non-negative integer");
      sc.options.seed = o["seed"].get<std::uint64_t>();
    }
  }
  return sc;
}

namespace detail {

inline Json term_json(const Term& t) { return term_to_string(t); }

}  // namespace detail

inline Json scenario_json(const Scenario& sc) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  if (!sc.name.empty()) doc["name"] = sc.name;
  doc["kind"] = to_string(sc.kind);
  if (sc.kind == ScenarioKind::Besancenot) {
    const auto& b = *sc.besancenot;
    Json p;
    p["mu"] = b.mu.to_string();
    p["theta_h"] = b.theta_h.to_string();
    p["theta_l"] = b.theta_l.to_string();
    p["lambda_w"] = b.lambda_w.to_string();
    p["delta_a"] = b.delta_a.to_string();
    p["delta_t"] = b.delta_t.to_string();
    p["c"] = b.c.to_string();
    p["phi"] = b.phi.to_string();
    if (b.belief_a) p["belief_a"] = b.belief_a->to_string();
    if (b.belief_t) p["belief_t"] = b.belief_t->to_string();
    doc["params"] = p;
  } else {
    Json g;
    Json pay = Json::array();
    if (sc.kind == ScenarioKind::Concrete) {
      const auto& game = *sc.game;
      g["players"] = {game.row_label(), game.col_label()};
      g["strategies"] = Json::array({Json(game.strategies(Player::Row)), Json(game.strategies(Player::Col))});
      for (const auto& line : game.payoffs()) {
        Json row = Json::array();
        for (const auto& cell : line) row.push_back({cell.row.to_string(), cell.col.to_string()});
        pay.push_back(row);
      }
    } else {
      const auto& game = *sc.symbolic;
      g["players"] = {game.row_label(), game.col_label()};
      g["strategies"] = Json::array({Json(game.strategies(Player::Row)), Json(game.strategies(Player::Col))});
      for (const auto& line : game.cells()) {
        Json row = Json::array();
        for (const auto& cell : line) row.push_back({detail::term_json(cell.row), detail::term_json(cell.col)});
        pay.push_back(row);
      }
    }
    g["payoffs"] = pay;
    doc["game"] = g;
    if (sc.kind == ScenarioKind::Symbolic) {
      Json lines = Json::array();
      std::istringstream is(sc.constraints->to_text());
      for (std::string l; std::getline(is, l);) lines.push_back(l);
      doc["constraints"] = lines;
    }
  }
  Json o;
  if (sc.options.ieds) {
    o["ieds"] = {{"kind", sc.options.ieds->kind == DominanceKind::Weak ? "weak" : "strict"},
                 {"order", detail::order_name(sc.options.ieds->order)}};
  }
  o["nonnegativity"] = sc.options.nonnegativity;
  o["seed"] = sc.options.seed;
  doc["options"] = o;
  return doc;
}

inline std::string emit_scenario(const Scenario& sc) { return scenario_json(sc).dump(2) + "\n"; }

inline Scenario concrete_scenario(std::string name, NormalFormGame game) {
  Scenario sc;
  sc.name = std::move(name);
  sc.kind = ScenarioKind::Concrete;
  sc.game = std::move(game);
  return sc;
}

inline Scenario publishing_symbolic_scenario(bool nonnegativity = true) {
  Scenario sc;
  sc.name = "publishing_symbolic";
  sc.kind = ScenarioKind::Symbolic;
  sc.symbolic = publishing_symbolic_3x3();
  sc.constraints = default_constraints(nonnegativity);
  sc.options.nonnegativity = nonnegativity;
  sc.options.ieds = IedsPolicy{DominanceKind::Weak, PlayerOrder::RowFirst};
  return sc;
}

inline Scenario besancenot_scenario(std::string name, BesancenotParams params) {
  Scenario sc;
  sc.name = std::move(name);
  sc.kind = ScenarioKind::Besancenot;
  sc.besancenot = std::move(params);
  return sc;
}

inline std::vector<std::string> builtin_scenario_names() {
  return {"besancenot_default", "habermann_default", "hanauske_pd", "hanauske_staghunt", "publishing_canonical",
          "publishing_symbolic"};
}

inline std::optional<Scenario> builtin_scenario(const std::string& name) {
  if (name == "publishing_canonical") {
    auto sc = concrete_scenario(name, publishing_game_3x3(canonical_publishing_values()));
    sc.options.ieds = IedsPolicy{DominanceKind::Weak, PlayerOrder::RowFirst};
    return sc;
  }
  if (name == "publishing_symbolic") return publishing_symbolic_scenario(true);
  if (name == "hanauske_pd") return concrete_scenario(name, hanauske_game({4, 1, 2, 1}));
  if (name == "hanauske_staghunt") return concrete_scenario(name, hanauske_game({4, 1, 1, 2}));
  if (name == "habermann_default") return concrete_scenario(name, habermann_game(habermann_default_params()));
  if (name == "besancenot_default") return besancenot_scenario(name, besancenot_default_params());
  return std::nullopt;
}

}  // namespace ordgame
