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

#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ordgame/audit.hpp"
#include "ordgame/dynamics.hpp"
#include "ordgame/game.hpp"
#include "ordgame/mixed.hpp"
#include "ordgame/models.hpp"
#include "ordgame/ordinal.hpp"
#include "ordgame/scenario.hpp"

namespace ordgame::report {

// Machine documents are ordered JSON; text renderings are derived from them.

inline std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

inline Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

inline Json header(const char* command) {
  Json d;
  d["schema_version"] = kSchemaVersion;
  d["command"] = command;
  return d;
}

inline Json instantiation_json(const Instantiation& v) {
  Json o = Json::object();
  for (const auto& [k, x] : v) o[k] = x.to_string();
  return o;
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::optional<IedsPolicy> ieds;  // overrides the scenario's policy
  std::size_t limit = 100000;
};

inline Json ieds_json(const NormalFormGame& g, const IedsPolicy& policy) {
  const auto t = ieds(g, policy);
  Json j;
  j["kind"] = policy.kind == DominanceKind::Weak ? "weak" : "strict";
  j["order"] = detail::order_name(policy.order);
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"round", s.round},
                     {"player", s.player == Player::Row ? g.row_label() : g.col_label()},
                     {"removed", s.removed},
                     {"dominator", s.dominator},
                     {"kind", s.kind == DominanceKind::Strict ? "strict" : "weak"}});
  }
  j["steps"] = steps;
  const auto& r = t.reduced();
  Json rest = Json::array();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t k = 0; k < r.cols(); ++k) rest.push_back(r.profile_label({i, k}));
  }
  j["remaining"] = rest;
  return j;
}

inline std::string summary_line(const NormalFormGame& g, const std::vector<StrategyProfile>& pure,
                                const std::optional<std::vector<EquilibriumResult>>& mixed) {
  std::string s;
  if (pure.empty()) {
    s = "no pure Nash";
  } else {
    s = "pure Nash ";
    for (std::size_t i = 0; i < pure.size(); ++i) s += (i ? ", " : "") + g.profile_label(pure[i]);
  }
  if (!mixed) return s;
  std::vector<const EquilibriumResult*> proper;
  for (const auto& e : *mixed) {
    if (e.kind != EquilibriumKind::PureCorner) proper.push_back(&e);
  }
  if (proper.empty()) return s;
  if (g.rows() == 2 && g.cols() == 2) {
    for (const auto* e : proper) {
      s += "; mixed p=" + e->profile.row[0].to_string() + ", q=" + e->profile.col[0].to_string();
    }
  } else {
    s += "; " + std::to_string(proper.size()) + (proper.size() == 1 ? " mixed equilibrium" : " mixed equilibria");
  }
  return s;
}

inline Json game_json(const NormalFormGame& g) {
  Json j;
  j["players"] = {g.row_label(), g.col_label()};
  j["strategies"] = Json::array({strings(g.strategies(Player::Row)), strings(g.strategies(Player::Col))});
  Json pay = Json::array();
  for (const auto& line : g.payoffs()) {
    Json row = Json::array();
    for (const auto& c : line) row.push_back({c.row.to_string(), c.col.to_string()});
    pay.push_back(row);
  }
  j["payoffs"] = pay;
  return j;
}

inline Json concrete_analysis(const NormalFormGame& g, const std::optional<IedsPolicy>& policy) {
  Json d;
  const auto pure = pure_nash(g);
  Json pn = Json::array();
  for (const auto& p : pure) {
    const auto ps = pareto_status(g, p);
    Json dom = Json::array();
    for (const auto& q : ps.dominated_by) dom.push_back(g.profile_label(q));
    pn.push_back({{"profile", g.profile_label(p)},
                  {"payoff", {g.payoff(p).row.to_string(), g.payoff(p).col.to_string()}},
                  {"pareto_optimal", ps.optimal()},
                  {"pareto_dominated_by", dom}});
  }
  d["pure_nash"] = pn;
  Json dom = Json::object();
  for (Player who : {Player::Row, Player::Col}) {
    Json list = Json::array();
    const auto v = dominated_strategies(g, who, DominanceKind::Weak);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].kind == DominanceStatus::NotDominated) continue;
      list.push_back({{"strategy", g.strategy_label(who, i)},
                      {"status", to_string(v[i].kind)},
                      {"dominator", g.strategy_label(who, *v[i].dominator)}});
    }
    dom[who == Player::Row ? g.row_label() : g.col_label()] = list;
  }
  d["dominance"] = dom;
  if (policy) d["ieds"] = ieds_json(g, *policy);
  std::optional<std::vector<EquilibriumResult>> mixed;
  if (g.rows() <= 4 && g.cols() <= 4) {
    mixed = support_enumeration(g);
    Json eq = Json::array();
    for (const auto& e : *mixed) {
      Json item{{"kind", to_string(e.kind)}, {"row", rationals(e.profile.row)}, {"col", rationals(e.profile.col)}};
      if (e.degeneracy_note) item["note"] = *e.degeneracy_note;
      eq.push_back(item);
    }
    d["mixed"] = {{"method", "support_enumeration"}, {"equilibria", eq}};
  } else {
    d["mixed"] = {{"method", "skipped"}, {"reason", "games larger than 4x4 are not enumerated"}};
  }
  d["summary"] = summary_line(g, pure, mixed);
  return d;
}

inline Json besancenot_json(const BesancenotParams& b) {
  Json d;
  Json rev = Json::array();
  for (int id = 1; id <= 5; ++id) {
    Json item{{"id", id}};
    try {
      item["value"] = besancenot_revenue(b, id).to_string();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivisionByZero) throw;
      item["value"] = nullptr;
      item["error"] = std::string(to_string(e.code()));
    }
    rev.push_back(item);
  }
  d["revenues"] = rev;
  d["revenue_5_corrected"] = besancenot_revenue(b, 5, true).to_string();
  Json util = Json::object();
  for (auto type : {AuthorType::H, AuthorType::L}) {
    Json per = Json::object();
    for (auto s : {AuthorStrategy::A, AuthorStrategy::T}) {
      const auto& belief = s == AuthorStrategy::A ? b.belief_a : b.belief_t;
      per[s == AuthorStrategy::A ? "A" : "T"] = belief ? Json(besancenot_utility(b, type, s).to_string()) : Json(nullptr);
    }
    util[type == AuthorType::H ? "H" : "L"] = per;
  }
  d["utilities"] = util;
  d["preferences"] = {{"Leading", besancenot_preferences(JournalType::Leading)},
                      {"SpecializedGood", besancenot_preferences(JournalType::SpecializedGood)},
                      {"SecondTier", besancenot_preferences(JournalType::SecondTier)}};
  return d;
}

inline Json solve_document(const Scenario& sc, const SolveOptions& opt = {}) {
  Json d = header("solve");
  d["scenario"] = sc.name;
  d["kind"] = to_string(sc.kind);
  const auto policy = opt.ieds ? opt.ieds : sc.options.ieds;
  if (sc.kind == ScenarioKind::Concrete) {
    d["game"] = game_json(*sc.game);
    const Json analysis = concrete_analysis(*sc.game, policy);
    for (const auto& [k, v] : analysis.items()) d[k] = v;
  } else if (sc.kind == ScenarioKind::Symbolic) {
    const auto exts = linear_extensions(*sc.constraints, opt.limit);
    d["constraints"] = sc.constraints->to_text();
    Json list = Json::array();
    std::optional<std::set<std::string>> common;
    for (const auto& e : exts) {
      const auto values = canonical_instantiation(e);
      const auto g = sc.symbolic->instantiate(values);
      Json item{{"index", e.index}, {"order", e.to_string()}, {"values", instantiation_json(values)}};
      const auto pure = pure_nash(g);
      Json pn = Json::array();
      std::set<std::string> here;
      for (const auto& p : pure) {
        pn.push_back(g.profile_label(p));
        here.insert(g.profile_label(p));
      }
      item["pure_nash"] = pn;
      if (policy) item["ieds"] = ieds_json(g, *policy);
      list.push_back(item);
      if (!common) {
        common = here;
      } else {
        std::set<std::string> keep;
        std::set_intersection(common->begin(), common->end(), here.begin(), here.end(),
                              std::inserter(keep, keep.begin()));
        common = std::move(keep);
      }
    }
    d["extensions"] = list;
    std::string s = std::to_string(exts.size()) + (exts.size() == 1 ? " extension" : " extensions") +
                    "; pure Nash in every extension: ";
    if (!common || common->empty()) {
      s += "none";
    } else {
      bool first = true;
      for (const auto& p : *common) {
        s += (first ? "" : ", ") + p;
        first = false;
      }
    }
    d["summary"] = s;
  } else {
    d["params"] = scenario_json(sc)["params"];
    const Json values = besancenot_json(*sc.besancenot);
    for (const auto& [k, v] : values.items()) d[k] = v;
    d["summary"] = "revenues R1..R5 = " + [&] {
      std::string s;
      for (const auto& r : d["revenues"]) {
        s += (s.empty() ? "" : ", ") + (r["value"].is_null() ? std::string("pole") : r["value"].get<std::string>());
      }
      return s;
    }();
  }
  return d;
}

inline std::string matrix_text(const Json& game) {
  const auto& rows = game["strategies"][0];
  const auto& cols = game["strategies"][1];
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 0;
  for (const auto& line : game["payoffs"]) {
    auto& out = cells.emplace_back();
    for (const auto& c : line) {
      out.push_back("(" + c[0].get<std::string>() + "," + c[1].get<std::string>() + ")");
      width = std::max(width, out.back().size());
    }
  }
  std::size_t label_w = 0;
  for (const auto& r : rows) label_w = std::max(label_w, r.get<std::string>().size());
  for (const auto& c : cols) width = std::max(width, c.get<std::string>().size());
  std::ostringstream os;
  os << "  " << std::string(label_w, ' ');
  for (const auto& c : cols) os << "  " << std::setw(static_cast<int>(width)) << c.get<std::string>();
  os << "\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << "  " << std::left << std::setw(static_cast<int>(label_w)) << rows[r].get<std::string>() << std::right;
    for (const auto& c : cells[r]) os << "  " << std::setw(static_cast<int>(width)) << c;
    os << "\n";
  }
  return os.str();
}

inline std::string ieds_text(const Json& j, const std::string& indent) {
  std::ostringstream os;
  os << indent << "IEDS (" << j["kind"].get<std::string>() << ", " << j["order"].get<std::string>() << "):\n";
  for (const auto& s : j["steps"]) {
    os << indent << "  " << s["round"].get<std::size_t>() << ". " << s["player"].get<std::string>() << " removes "
       << s["removed"].get<std::string>() << " (" << s["kind"].get<std::string>() << "ly dominated by "
       << s["dominator"].get<std::string>() << ")\n";
  }
  std::string rest;
  for (const auto& p : j["remaining"]) rest += (rest.empty() ? "" : ", ") + p.get<std::string>();
  os << indent << "  remaining: " << rest << "\n";
  return os.str();
}

inline std::string solve_text(const Json& d) {
  std::ostringstream os;
  os << "scenario: " << (d["scenario"].get<std::string>().empty() ? "-" : d["scenario"].get<std::string>()) << " ("
     << d["kind"].get<std::string>() << ")\n";
  const std::string kind = d["kind"];
  if (kind == "concrete") {
    os << "players: " << d["game"]["players"][0].get<std::string>() << " (rows), "
       << d["game"]["players"][1].get<std::string>() << " (columns)\n";
    os << matrix_text(d["game"]);
    os << "pure Nash:";
    if (d["pure_nash"].empty()) os << " none";
    os << "\n";
    for (const auto& p : d["pure_nash"]) {
      os << "  " << p["profile"].get<std::string>() << " payoff (" << p["payoff"][0].get<std::string>() << ","
         << p["payoff"][1].get<std::string>() << ") ";
      if (p["pareto_optimal"].get<bool>()) {
        os << "Pareto optimal\n";
      } else {
        std::string by;
        for (const auto& q : p["pareto_dominated_by"]) by += (by.empty() ? "" : ", ") + q.get<std::string>();
        os << "Pareto-dominated by " << by << "\n";
      }
    }
    os << "dominated strategies:\n";
    for (auto it = d["dominance"].begin(); it != d["dominance"].end(); ++it) {
      os << "  " << it.key() << ":";
      if (it.value().empty()) os << " none";
      for (const auto& s : it.value()) {
        os << " " << s["strategy"].get<std::string>() << " (" << s["status"].get<std::string>() << " by "
           << s["dominator"].get<std::string>() << ")";
      }
      os << "\n";
    }
    if (d.contains("ieds")) os << ieds_text(d["ieds"], "");
    if (d["mixed"]["method"] == "support_enumeration") {
      os << "equilibria (support enumeration):\n";
      for (const auto& e : d["mixed"]["equilibria"]) {
        auto vec = [](const Json& a) {
          std::string s;
          for (const auto& x : a) s += (s.empty() ? "" : ", ") + x.get<std::string>();
          return "(" + s + ")";
        };
        os << "  row " << vec(e["row"]) << " col " << vec(e["col"]) << " " << e["kind"].get<std::string>();
        if (e.contains("note")) os << " [" << e["note"].get<std::string>() << "]";
        os << "\n";
      }
    } else {
      os << "mixed equilibria: skipped (" << d["mixed"]["reason"].get<std::string>() << ")\n";
    }
  } else if (kind == "symbolic") {
    os << "constraints:\n";
    std::istringstream is(d["constraints"].get<std::string>());
    for (std::string l; std::getline(is, l);) os << "  " << l << "\n";
    for (const auto& e : d["extensions"]) {
      os << "extension " << e["index"].get<std::size_t>() << ": " << e["order"].get<std::string>() << "\n";
      std::string pn;
      for (const auto& p : e["pure_nash"]) pn += (pn.empty() ? "" : ", ") + p.get<std::string>();
      os << "  pure Nash: " << (pn.empty() ? "none" : pn) << "\n";
      if (e.contains("ieds")) os << ieds_text(e["ieds"], "  ");
    }
  } else {
    for (const auto& r : d["revenues"]) {
      os << "R" << r["id"].get<int>() << " = " << (r["value"].is_null() ? "pole (DivisionByZero)" : r["value"].get<std::string>())
         << "\n";
    }
    os << "R5 with (1 - phi) = " << d["revenue_5_corrected"].get<std::string>() << "\n";
    for (auto it = d["utilities"].begin(); it != d["utilities"].end(); ++it) {
      os << "U(" << it.key() << "): A = " << (it.value()["A"].is_null() ? "n/a" : it.value()["A"].get<std::string>())
         << ", T = " << (it.value()["T"].is_null() ? "n/a" : it.value()["T"].get<std::string>()) << "\n";
    }
    for (auto it = d["preferences"].begin(); it != d["preferences"].end(); ++it) {
      std::string ids;
      for (const auto& x : it.value()) ids += (ids.empty() ? "" : ", ") + std::to_string(x.get<int>());
      os << "preferred by " << it.key() << ": {" << ids << "}\n";
    }
  }
  os << "summary: " << d["summary"].get<std::string>() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// dynamics

inline Json br_document(const NormalFormGame& g, const BrDynamicsTrace& t, BrRule rule) {
  Json d = header("dynamics");
  d["mode"] = "br";
  d["rule"] = rule == BrRule::AlternatingRowFirst ? "row_first" : "col_first";
  Json path = Json::array();
  for (const auto& p : t.path) path.push_back(g.profile_label(p));
  d["path"] = path;
  Json term;
  std::string summary;
  if (const auto* c = std::get_if<Cycle>(&t.terminal)) {
    term = {{"type", "Cycle"}, {"period", c->period}, {"first_index", c->first_index}};
    summary = "Cycle period " + std::to_string(c->period) + ": ";
    for (std::size_t i = 0; i < c->period; ++i) summary += g.profile_label(t.path[c->first_index + i]) + "→";
    summary += "…";
  } else if (const auto* f = std::get_if<FixedPoint>(&t.terminal)) {
    term = {{"type", "FixedPoint"}, {"profile", g.profile_label(f->profile)}};
    summary = "Fixed point " + g.profile_label(f->profile) + " after " + std::to_string(t.path.size() - 1) + " moves";
  } else {
    term = {{"type", "Truncated"}};
    summary = "Truncated after " + std::to_string(t.path.size() - 1) + " moves";
  }
  d["terminal"] = term;
  d["summary"] = summary;
  return d;
}

inline std::string br_text(const Json& d) {
  std::string path;
  for (const auto& p : d["path"]) path += (path.empty() ? "" : " → ") + p.get<std::string>();
  return d["summary"].get<std::string>() + "\npath: " + path + "\n";
}

inline Json shares_document(const NormalFormGame& g, const ShareTrajectory& tr, double h, double sigma,
                            double threshold) {
  Json d = header("dynamics");
  d["mode"] = "shares";
  d["strategies"] = strings(g.strategies(Player::Row));
  d["herd_weight"] = fmt_double(h);
  d["payoff_shift"] = fmt_double(sigma);
  d["steps"] = tr.states.size() - 1;
  d["threshold"] = fmt_double(threshold);
  Json fin = Json::array();
  for (double v : tr.states.back().shares) fin.push_back(fmt_double(v));
  d["final"] = fin;
  const auto& st = tr.stats;
  d["converged_to"] = st.converged_to ? Json(g.strategy_label(Player::Row, *st.converged_to)) : Json(nullptr);
  d["time_to_threshold"] = st.time_to_threshold ? Json(*st.time_to_threshold) : Json(nullptr);
  d["max_slope"] = fmt_double(st.max_slope);
  return d;
}

inline std::string shares_text(const Json& d) {
  std::ostringstream os;
  os << "converged_to=" << (d["converged_to"].is_null() ? "none" : d["converged_to"].get<std::string>()) << "\n";
  os << "time_to_threshold="
     << (d["time_to_threshold"].is_null() ? std::string("none") : std::to_string(d["time_to_threshold"].get<std::size_t>()))
     << "\n";
  os << "max_slope=" << d["max_slope"].get<std::string>() << "\n";
  os << "final=";
  for (std::size_t i = 0; i < d["final"].size(); ++i) {
    os << (i ? "," : "") << d["strategies"][i].get<std::string>() << ":" << d["final"][i].get<std::string>();
  }
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// audit

inline Json repair_json(const RepairResult& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  Json list = Json::array();
  for (const auto& rep : r.repairs) {
    Json edits = Json::array();
    for (const auto& e : rep.edits) edits.push_back(describe(e));
    list.push_back({{"edits", edits}});
  }
  j["repairs"] = list;
  return j;
}

inline Json audit_document(const AuditReport& rep) {
  Json d = header("audit");
  d["nonnegativity"] = rep.nonnegativity;
  Json claims = Json::array();
  for (const auto& c : rep.claims) {
    Json j;
    j["id"] = c.id;
    j["anchor"] = {{"location", c.anchor.location}, {"statement", c.anchor.statement}};
    j["asserted"] = c.asserted;
    j["status"] = to_string(c.status);
    j["partial"] = c.partial;
    j["expected_status"] = to_string(c.expected_status);
    j["matches_expected"] = c.matches_expected();
    Json parts = Json::array();
    for (const auto& p : c.parts) {
      Json pj{{"statement", p.statement}, {"status", to_string(p.status)}, {"exhaustive", p.exhaustive}};
      pj["condition"] = p.condition ? Json(p.condition->to_string()) : Json(nullptr);
      pj["counterexample"] = p.counterexample ? instantiation_json(*p.counterexample) : Json(nullptr);
      pj["explanation"] = p.explanation;
      parts.push_back(pj);
    }
    j["parts"] = parts;
    j["note"] = c.explanation;
    j["repair"] = repair_json(c.repair);
    claims.push_back(j);
  }
  d["claims"] = claims;
  return d;
}

inline std::string audit_text(const Json& d) {
  std::ostringstream os;
  os << "audit (nonnegativity " << (d["nonnegativity"].get<bool>() ? "on" : "off") << ")\n";
  for (const auto& c : d["claims"]) {
    std::string status = c["status"];
    if (c["partial"].get<bool>()) status += " (partial)";
    os << c["id"].get<std::string>() << "  " << status;
    for (const auto& p : c["parts"]) {
      if (!p["condition"].is_null()) os << " [" << p["condition"].get<std::string>() << "]";
    }
    os << (c["matches_expected"].get<bool>() ? "" : "  UNEXPECTED") << "\n";
    os << "    " << c["anchor"]["location"].get<std::string>() << ": " << c["anchor"]["statement"].get<std::string>()
       << "\n";
    for (const auto& p : c["parts"]) {
      os << "    - " << p["statement"].get<std::string>() << ": " << p["status"].get<std::string>();
      if (!p["explanation"].get<std::string>().empty()) os << "; " << p["explanation"].get<std::string>();
      os << "\n";
    }
    if (!c["note"].get<std::string>().empty()) os << "    note: " << c["note"].get<std::string>() << "\n";
    const auto& r = c["repair"];
    os << "    repair: " << r["kind"].get<std::string>();
    for (const auto& rep : r["repairs"]) {
      std::string e;
      for (const auto& x : rep["edits"]) e += (e.empty() ? "" : " + ") + x.get<std::string>();
      os << "\n      " << e;
    }
    os << "\n";
  }
  return os.str();
}

inline Json repair_document(const std::string& claim_id, bool nonnegativity, std::size_t max_edits,
                            const RepairResult& r) {
  Json d = header("repair");
  d["claim"] = claim_id;
  d["nonnegativity"] = nonnegativity;
  d["max_edits"] = max_edits;
  const Json rj = repair_json(r);
  for (const auto& [k, v] : rj.items()) d[k] = v;
  Json sets = Json::array();
  for (const auto& rep : r.repairs) sets.push_back(rep.constraints.to_text());
  d["constraints"] = sets;
  return d;
}

inline std::string repair_text(const Json& d) {
  std::ostringstream os;
  os << d["claim"].get<std::string>() << ": " << d["kind"].get<std::string>() << "\n";
  for (const auto& rep : d["repairs"]) {
    std::string e;
    for (const auto& x : rep["edits"]) e += (e.empty() ? "" : " + ") + x.get<std::string>();
    os << "  " << e << "\n";
  }
  return os.str();
}

}  // namespace ordgame::report
