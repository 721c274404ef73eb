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

// ordgame: solve, audit and simulate strategic-form games from the command line.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "ordgame/ordgame.hpp"

namespace {

using namespace ordgame;

// Exact value from "7", "-3/4" or "0.25".
Rational parse_number(const std::string& s) {
  if (Rational::is_literal(s)) return Rational::parse(s);
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac = s.size() - dot - 1;
    if (frac > 0 && frac <= 18 && Rational::is_literal(digits)) {
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac; ++i) den *= 10;
      return Rational::parse(digits) / Rational(den);
    }
  }
  throw Error(ErrorCode::ParseError, "'" + s + "' is not a number");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

bool on_off(const std::string& v) {
  if (v == "on") return true;
  if (v == "off") return false;
  throw Error(ErrorCode::ParseError, "expected 'on' or 'off', got '" + v + "'");
}

Scenario load_scenario(const std::string& ref) {
  std::string text;
  if (ref == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return parse_scenario(text);
  }
  std::ifstream in(ref, std::ios::binary);
  if (!in) {
    if (auto sc = builtin_scenario(ref)) return *sc;
    throw Error(ErrorCode::ParseError, "no scenario file or builtin named '" + ref + "'");
  }
  text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return parse_scenario(text);
}

// Concrete game of a scenario; symbolic scenarios use the canonical values of
// their first extension.
NormalFormGame scenario_game(const Scenario& sc) {
  switch (sc.kind) {
    case ScenarioKind::Concrete: return *sc.game;
    case ScenarioKind::Symbolic:
      return sc.symbolic->instantiate(canonical_instantiation(linear_extensions(*sc.constraints).front()));
    case ScenarioKind::Besancenot: break;
  }
  throw Error(ErrorCode::ShapeError, "scenario '" + sc.name + "' has no strategic-form game");
}

void emit(const Json& doc, const std::string& format, std::string (*text)(const Json&)) {
  if (format == "machine") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text(doc);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategic-form game solver, ordinal claim auditor and dynamics simulator"};
  app.require_subcommand(1);
  std::string format = "text";
  const auto formats = CLI::IsMember({"text", "machine"});

  // solve
  auto* solve = app.add_subcommand("solve", "Pure, dominance, IEDS and mixed analysis of a scenario");
  std::string solve_ref;
  std::string ieds_kind;
  std::string ieds_order;
  std::size_t limit = 100000;
  solve->add_option("scenario", solve_ref, "Scenario file, '-' for stdin, or a builtin name")->required();
  solve->add_option("--format", format, "text or machine")->check(formats);
  solve->add_option("--ieds", ieds_kind, "Run IEDS with weak or strict dominance")->check(CLI::IsMember({"weak", "strict"}));
  solve->add_option("--order", ieds_order, "IEDS order: row_first, col_first or alternating");
  solve->add_option("--limit", limit, "Maximum number of linear extensions");

  // audit
  auto* audit = app.add_subcommand("audit", "Check the registered claims about the publishing game");
  std::string nonneg = "on";
  std::size_t threads = 0;
  audit->add_option("--nonnegativity", nonneg, "Draw counterexamples from payoffs anchored above 0 (on/off)");
  audit->add_option("--format", format, "text or machine")->check(formats);
  audit->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

  // repair
  auto* repair = app.add_subcommand("repair", "Search minimal constraint edits that make a claim hold");
  std::string claim_id;
  std::size_t max_edits = 1;
  repair->add_option("claim", claim_id, "Claim id, e.g. C3")->required();
  repair->add_option("--nonnegativity", nonneg, "Start from the anchored constraint set (on/off)");
  repair->add_option("--max-edits", max_edits, "Edit budget (at most 3)");
  repair->add_option("--format", format, "text or machine")->check(formats);

  // dynamics
  auto* dyn = app.add_subcommand("dynamics", "Best-response or replicator dynamics");
  dyn->require_subcommand(1);
  auto* br = dyn->add_subcommand("br", "Alternating best-response dynamics");
  std::string dyn_ref;
  std::string start;
  std::string rule = "row_first";
  std::size_t max_steps = 1000;
  br->add_option("scenario", dyn_ref, "Scenario file, '-' or builtin name")->required();
  br->add_option("--start", start, "Start profile as row,col labels (default: first strategies)");
  br->add_option("--rule", rule, "row_first or col_first")->check(CLI::IsMember({"row_first", "col_first"}));
  br->add_option("--max-steps", max_steps, "Turn budget");
  br->add_option("--format", format, "text or machine")->check(formats);

  auto* shares = dyn->add_subcommand("shares", "Replicator dynamics with herding over row strategies");
  std::string init;
  std::string h = "0";
  std::string sigma = "0";
  std::size_t steps = 1000;
  std::string threshold = "0.99";
  std::string out_path;
  shares->add_option("scenario", dyn_ref, "Scenario file, '-' or builtin name")->required();
  shares->set_help_flag("--help", "Print this help message and exit");
  shares->add_option("--init", init, "Initial shares, comma separated (default: uniform)");
  shares->add_option("--h", h, "Herd weight (>= 0)");
  shares->add_option("--sigma", sigma, "Payoff shift");
  shares->add_option("--steps", steps, "Number of steps");
  shares->add_option("--threshold", threshold, "Convergence threshold in (0.5, 1]");
  shares->add_option("--out", out_path, "Write the trajectory (step,x_...) to this file");
  shares->add_option("--format", format, "text or machine")->check(formats);

  // model
  auto* model = app.add_subcommand("model", "Emit a scenario generated from a parametric model");
  model->require_subcommand(1);
  auto* han = model->add_subcommand("hanauske", "Symmetric open-access game");
  std::string hr = "4", ha = "1", hb = "2", hd = "1";
  han->add_option("--r", hr, "Base reputation");
  han->add_option("--alpha", ha, "Reputation loss (>= 0)");
  han->add_option("--beta", hb, "Reputation gain (>= 0)");
  han->add_option("--delta", hd, "Mutual open-access bonus");

  auto* hab = model->add_subcommand("habermann", "Authors against publishers");
  std::string bR = "10", br_ = "2", bI = "5", btau = "1", bL = "2", bG = "3", bP = "4";
  hab->add_option("--R", bR, "Reputation");
  hab->add_option("--r", br_, "Reputation loss, 0 < r < R");
  hab->add_option("--I", bI, "Impact");
  hab->add_option("--tau", btau, "Impact loss, 0 < tau < I");
  hab->add_option("--L", bL, "Open-access expenditure (> 0)");
  hab->add_option("--G", bG, "Subscription or APC price (> 0)");
  hab->add_option("--P", bP, "Excess profit (> 0)");

  auto* bes = model->add_subcommand("besancenot", "Signalling with author-pays journals");
  const auto bd = besancenot_default_params();
  std::string mu = bd.mu.to_string(), th = bd.theta_h.to_string(), tl = bd.theta_l.to_string(),
              lw = bd.lambda_w.to_string(), da = bd.delta_a.to_string(), dt = bd.delta_t.to_string(),
              c = bd.c.to_string(), phi = bd.phi.to_string(), ba = bd.belief_a->to_string(),
              bt = bd.belief_t->to_string();
  bes->add_option("--mu", mu, "Share of high-quality papers");
  bes->add_option("--theta-h", th, "High quality");
  bes->add_option("--theta-l", tl, "Low quality");
  bes->add_option("--lambda-w", lw, "Weight on perceived quality");
  bes->add_option("--delta-a", da, "Readership of OA papers");
  bes->add_option("--delta-t", dt, "Readership of subscription papers");
  bes->add_option("--c", c, "Article processing charge");
  bes->add_option("--phi", phi, "Frequency of OA authors");
  bes->add_option("--belief-a", ba, "Expected quality given OA");
  bes->add_option("--belief-t", bt, "Expected quality given subscription");

  auto* pub = model->add_subcommand("publishing", "The 3x3 institution/publisher game");
  bool canonical = false;
  std::string pub_nonneg = "on";
  pub->add_flag("--canonical", canonical, "Concrete game with canonical payoff values");
  pub->add_option("--nonnegativity", pub_nonneg, "Anchor every symbol above 0 (on/off)");

  app.add_subcommand("scenarios", "List builtin scenario names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*solve) {
      report::SolveOptions opt;
      opt.limit = limit;
      if (!ieds_kind.empty() || !ieds_order.empty()) {
        IedsPolicy p;
        if (!ieds_kind.empty()) p.kind = parse_dominance_kind(ieds_kind);
        if (!ieds_order.empty()) p.order = parse_player_order(ieds_order);
        opt.ieds = p;
      }
      emit(report::solve_document(load_scenario(solve_ref), opt), format, report::solve_text);
    } else if (*audit) {
      emit(report::audit_document(run_audit({on_off(nonneg), threads})), format, report::audit_text);
    } else if (*repair) {
      const bool flag = on_off(nonneg);
      const auto r = repair_search(claim_id, default_constraints(flag), max_edits);
      emit(report::repair_document(claim_id, flag, max_edits, r), format, report::repair_text);
    } else if (*br) {
      const auto g = scenario_game(load_scenario(dyn_ref));
      StrategyProfile s{0, 0};
      if (!start.empty()) {
        const auto parts = split(start, ',');
        if (parts.size() != 2) throw Error(ErrorCode::ParseError, "--start expects row,col");
        const auto r = g.index_of(Player::Row, parts[0]);
        const auto k = g.index_of(Player::Col, parts[1]);
        if (!r || !k) throw Error(ErrorCode::IndexOutOfBounds, "unknown start profile '" + start + "'");
        s = {*r, *k};
      }
      const auto r = rule == "row_first" ? BrRule::AlternatingRowFirst : BrRule::AlternatingColFirst;
      emit(report::br_document(g, br_dynamics(g, s, r, max_steps), r), format, report::br_text);
    } else if (*shares) {
      const auto g = scenario_game(load_scenario(dyn_ref));
      ShareState x;
      if (init.empty()) {
        x.shares.assign(g.rows(), 1.0 / static_cast<double>(g.rows()));
      } else {
        for (const auto& part : split(init, ',')) x.shares.push_back(parse_number(part).to_double());
      }
      const double hv = parse_number(h).to_double();
      const double sv = parse_number(sigma).to_double();
      const double tv = parse_number(threshold).to_double();
      const auto tr = replicator_simulate(g, x, hv, sv, steps, tv);
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error(ErrorCode::DomainError, "cannot write '" + out_path + "'");
        write_trajectory(out, tr, g.strategies(Player::Row));
      }
      emit(report::shares_document(g, tr, hv, sv, tv), format, report::shares_text);
    } else if (*han) {
      const HanauskeParams p{parse_number(hr), parse_number(ha), parse_number(hb), parse_number(hd)};
      std::cout << emit_scenario(concrete_scenario("hanauske", hanauske_game(p)));
    } else if (*hab) {
      const HabermannParams p{parse_number(bR), parse_number(br_), parse_number(bI), parse_number(btau),
                              parse_number(bL), parse_number(bG), parse_number(bP)};
      std::cout << emit_scenario(concrete_scenario("habermann", habermann_game(p)));
    } else if (*bes) {
      BesancenotParams p;
      p.mu = parse_number(mu);
      p.theta_h = parse_number(th);
      p.theta_l = parse_number(tl);
      p.lambda_w = parse_number(lw);
      p.delta_a = parse_number(da);
      p.delta_t = parse_number(dt);
      p.c = parse_number(c);
      p.phi = parse_number(phi);
      p.belief_a = parse_number(ba);
      p.belief_t = parse_number(bt);
      p.validate();
      std::cout << emit_scenario(besancenot_scenario("besancenot", p));
    } else if (*pub) {
      if (canonical) {
        auto sc = *builtin_scenario("publishing_canonical");
        std::cout << emit_scenario(sc);
      } else {
        std::cout << emit_scenario(publishing_symbolic_scenario(on_off(pub_nonneg)));
      }
    } else {
      for (const auto& n : builtin_scenario_names()) std::cout << n << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ExtensionLimitExceeded ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
