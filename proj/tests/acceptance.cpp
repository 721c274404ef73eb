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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ordgame/ordgame.hpp"

namespace {

using namespace ordgame;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string profile_set(const NormalFormGame& g) {
  std::string s;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) s += (s.empty() ? "" : " ") + g.profile_label({r, c});
  }
  return "{" + s + "}";
}

// AC1: unique mixed equilibrium (1,1) of the OA/H game under nonnegativity.
Outcome ac1() {
  const auto cs = default_constraints(true);
  std::size_t extensions = 0, instances = 0;
  const auto r = holds_for_all(publishing_symbolic_2x2(), cs, Mixed2x2EquilibriumEquals{1, 1});
  if (!r.holds()) return fail("holds_for_all found a counterexample");
  for (const auto& e : linear_extensions(cs)) {
    ++extensions;
    for (std::uint64_t s = 0; s <= 50; ++s) {
      const auto v = s == 0 ? canonical_instantiation(e) : sample_instantiation_for(e, s);
      const auto g = publishing_game_2x2(v);
      const auto eqs = mixed_2x2(g);
      const MixedProfile one{{1, 0}, {1, 0}};
      if (eqs.size() != 1 || eqs[0].profile != one) return fail("mixed_2x2 differs on extension " + e.to_string());
      if (support_enumeration(g) != eqs) return fail("support enumeration differs on " + e.to_string());
      if (!oracle::is_equilibrium(g, one.row, one.col)) return fail("oracle rejects (1,1)");
      ++instances;
    }
  }
  // Splitting the ties into strict orders is a sensitivity check only; report, do not require.
  std::size_t split_ok = 0, splits = 0;
  for (const auto& split : epsilon_split(cs)) {
    ++splits;
    split_ok += holds_for_all(publishing_symbolic_2x2(), split, Mixed2x2EquilibriumEquals{1, 1}).holds();
  }
  return {true, "unique equilibrium (p,q)=(1,1) on " + std::to_string(extensions) + (extensions == 1 ? " extension, " : " extensions, ") +
                    std::to_string(instances) + " instantiations; tie splits holding " + std::to_string(split_ok) +
                    "/" + std::to_string(splits)};
}

// AC2: (OA,OA) is a pure Nash equilibrium whenever alpha_p > 0, over every 0 placement.
Outcome ac2() {
  const auto cs = default_constraints(false);
  const auto exts = linear_extensions(cs);
  if (exts.size() != 8) return fail("expected 8 placements of 0, got " + std::to_string(exts.size()));
  HoldsForAllOptions opt;
  opt.condition = {{std::string(sym::alpha_p), Relation::Greater, Rational(0)}};
  const auto r = holds_for_all(publishing_symbolic_3x3(), cs, ProfileIsPureNash{{0, 0}}, opt);
  if (!r.holds() || !r.exhaustive) return fail("counterexample on a placement with alpha_p > 0");
  const std::size_t qualifying = r.extensions_checked;
  for (const auto& e : exts) {
    const auto v = canonical_instantiation(e);
    const bool positive = v.at(sym::alpha_p) > 0;
    const auto nash = oracle::pure_nash(publishing_game_3x3(v));
    const bool oa_oa = std::find(nash.begin(), nash.end(), StrategyProfile{0, 0}) != nash.end();
    if (positive && !oa_oa) return fail("oracle: (OA,OA) not Nash on " + e.to_string());
  }
  const auto on = holds_for_all(publishing_symbolic_3x3(), default_constraints(true), ProfileIsPureNash{{0, 0}});
  if (!on.holds()) return fail("fails under nonnegativity");
  return {true, "exhaustive over 8 placements of 0; " + std::to_string(qualifying) +
                    " placements with alpha_p > 0 hold"};
}

// AC3: documented divergences are reported identically across runs and schedules.
Outcome ac3() {
  const std::size_t schedules[] = {1, 2, 3, 4, 8, 1, 2, 3, 4, 8};
  std::string first;
  AuditReport report;
  for (std::size_t threads : schedules) {
    report = run_audit({true, threads});
    const auto doc = report::audit_document(report).dump();
    if (first.empty()) first = doc;
    if (doc != first) return fail("audit output differs with " + std::to_string(threads) + " threads");
  }
  const auto cs = default_constraints(true);
  auto find = [&](const std::string& id) -> const ClaimResult& {
    return *std::find_if(report.claims.begin(), report.claims.end(), [&](const auto& c) { return c.id == id; });
  };
  auto reverify = [&](const ClaimResult& c, std::size_t part) -> std::optional<Instantiation> {
    const auto& p = c.parts.at(part);
    if (p.status != ClaimStatus::FailsWithCounterexample || !p.counterexample) return std::nullopt;
    if (!satisfies(cs, *p.counterexample)) return std::nullopt;
    if (!reproduces_failure(find_claim(c.id).parts.at(part), *p.counterexample)) return std::nullopt;
    return p.counterexample;
  };

  const auto& c3 = find("C3");
  if (c3.status != ClaimStatus::FailsWithCounterexample || !c3.partial) return fail("C3 is not a partial failure");
  const auto x3 = reverify(c3, 1);
  if (!x3) return fail("C3 counterexample does not re-verify");
  const auto g3 = publishing_game_3x3(*x3);
  if (oracle::pure_nash(g3) != std::vector<StrategyProfile>{{0, 0}}) return fail("C3: oracle Nash set is not {(OA,OA)}");

  const auto& c2 = find("C2");
  const auto x2 = reverify(c2, 0);
  if (c2.status != ClaimStatus::FailsWithCounterexample || !x2) return fail("C2 counterexample does not re-verify");
  if (!(x2->at(sym::alpha_p) > 0)) return fail("C2 counterexample has alpha_p <= 0");
  const auto reduced = ieds(publishing_game_3x3(*x2), {DominanceKind::Weak, PlayerOrder::ColFirst}).reduced();
  if (profile_set(reduced) != "{(OA,OA)}") return fail("C2: publisher-first IEDS gives " + profile_set(reduced));

  const auto& c4 = find("C4");
  const auto x4 = reverify(c4, 0);
  if (c4.status != ClaimStatus::FailsWithCounterexample || !x4) return fail("C4 counterexample does not re-verify");
  const auto g4 = publishing_game_3x3(*x4);
  if (!pareto_dominates(g4.payoff(1, 0), g4.payoff(0, 0))) return fail("C4: (C,OA) does not dominate (OA,OA)");

  return {true, "10 runs over 1-8 threads byte-identical; C3 partial, C2 gives (OA,OA), C4 dominated by (C,OA); "
                "counterexamples re-verified"};
}

// AC4: Hanauske game, 1000 sampled parameter sets.
Outcome ac4() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(0, 120);
  std::uniform_int_distribution<int> pos(1, 120);
  std::uniform_int_distribution<int> any(-120, 120);
  std::size_t open_open = 0;
  for (int i = 0; i < 1000; ++i) {
    HanauskeParams x{Rational(any(rng), 12), Rational(pos(rng), 12), Rational(num(rng), 12), Rational(num(rng), 12)};
    if (i % 7 == 0) x.delta = x.beta;
    const auto g = hanauske_game(x);
    const auto nash = oracle::pure_nash(g);
    if (pure_nash(g) != nash) return fail("pure_nash disagrees with the oracle");
    auto contains = [&](StrategyProfile s) { return std::find(nash.begin(), nash.end(), s) != nash.end(); };
    if (!contains({1, 1})) return fail("(∅,∅) is not Nash for r=" + x.r.to_string());
    if (contains({0, 0}) != (x.delta >= x.beta)) return fail("(O,O) Nash does not match delta >= beta");
    open_open += contains({0, 0});
  }
  return {true, "(∅,∅) Nash in 1000/1000 samples; (O,O) Nash exactly when delta >= beta (" +
                    std::to_string(open_open) + " samples)"};
}

// AC5: Habermann oscillation and mixed equilibrium.
Outcome ac5() {
  const auto g = habermann_game(habermann_default_params());
  const auto t = br_dynamics(g, {0, 0}, BrRule::AlternatingRowFirst, 100);
  if (!t.is_cycle() || std::get<Cycle>(t.terminal).period != 4) return fail("best-response dynamics is not a 4-cycle");
  const auto eqs = support_enumeration(g);
  const MixedProfile want{{Rational(6, 13), Rational(7, 13)}, {Rational(2, 3), Rational(1, 3)}};
  if (eqs.size() != 1 || eqs[0].profile != want) return fail("support enumeration did not find p=6/13, q=2/3");
  if (!oracle::is_equilibrium(g, want.row, want.col)) return fail("oracle rejects p=6/13, q=2/3");
  return {true, "Cycle period 4 from (s1,p1); unique equilibrium p=6/13, q=2/3"};
}

// AC6: solvers against the brute-force oracle on random games.
Outcome ac6() {
  std::mt19937_64 rng(6);
  std::size_t points = 0;
  for (int i = 0; i < 500; ++i) {
    const auto g = oracle::random_game(rng, 3, -3, 3);
    const auto nash = oracle::pure_nash(g);
    if (pure_nash(g) != nash) return fail("pure_nash disagrees on game " + std::to_string(i));
    const auto eqs = support_enumeration(g);
    if (eqs.empty()) return fail("no equilibrium returned for game " + std::to_string(i));
    std::vector<StrategyProfile> pure_points;
    for (const auto& e : eqs) {
      if (!oracle::is_equilibrium(g, e.profile.row, e.profile.col)) {
        return fail("returned point fails the deviation check on game " + std::to_string(i));
      }
      if (e.row_support.size() == 1 && e.col_support.size() == 1) {
        pure_points.push_back({e.row_support[0], e.col_support[0]});
      }
      ++points;
    }
    std::sort(pure_points.begin(), pure_points.end());
    if (pure_points != nash) return fail("pure points of support enumeration differ on game " + std::to_string(i));
  }
  return {true, "500 games up to 3x3; " + std::to_string(points) + " equilibria re-verified"};
}

// Printed revenue expressions, coded separately from the library.
Rational printed_revenue(const BesancenotParams& p, int id) {
  const Rational mu = p.mu, thH = p.theta_h, thL = p.theta_l, lam = p.lambda_w, dA = p.delta_a, dT = p.delta_t,
                 c = p.c, phi = p.phi;
  const Rational e_theta_t = mu * thH + (Rational(1) - mu) * thL;
  if (id == 1) return c * mu + (Rational(1) - mu) * thL;
  if (id == 2) return c;
  if (id == 3) return mu * thH + (Rational(1) - mu) * thL;
  if (id == 4) {
    const Rational bracket_den = c - (dA - dT) * thL;
    if (bracket_den == Rational(0)) throw Error(ErrorCode::DivisionByZero, "pole");
    return thL - mu * lam * dA * (thH - thL) * ((thL - c) / bracket_den);
  }
  return phi * c + (Rational(1) + phi) * e_theta_t;
}

// AC7: Besancenot revenue formulas and journal preferences.
Outcome ac7() {
  std::mt19937_64 rng(7);
  auto frac = [&](int lo, int hi, int den) {
    std::uniform_int_distribution<int> d(lo, hi);
    return Rational(d(rng), den);
  };
  for (int i = 0; i < 100; ++i) {
    BesancenotParams p;
    p.mu = frac(1, 49, 100);
    p.theta_l = frac(1, 40, 10);
    p.theta_h = p.theta_l + frac(1, 40, 10);
    p.lambda_w = frac(0, 49, 100);
    p.delta_t = frac(1, 30, 10);
    p.delta_a = p.delta_t + frac(1, 30, 10);
    p.c = frac(0, 60, 10);
    p.phi = frac(0, 10, 10);
    for (int id = 1; id <= 5; ++id) {
      bool lib_pole = false, ref_pole = false;
      Rational lib, ref;
      try {
        lib = besancenot_revenue(p, id);
      } catch (const Error& e) {
        lib_pole = e.code() == ErrorCode::DivisionByZero;
      }
      try {
        ref = printed_revenue(p, id);
      } catch (const Error&) {
        ref_pole = true;
      }
      if (lib_pole != ref_pole || (!lib_pole && lib != ref)) {
        return fail("revenue " + std::to_string(id) + " differs: " + lib.to_string() + " vs " + ref.to_string());
      }
    }
    p.c = (p.delta_a - p.delta_t) * p.theta_l;
    try {
      besancenot_revenue(p, 4);
      return fail("no DivisionByZero at the R_H1 pole");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivisionByZero) return fail("wrong error at the R_H1 pole");
    }
  }
  if (besancenot_preferences(JournalType::Leading) != std::set<int>{1} ||
      besancenot_preferences(JournalType::SpecializedGood) != std::set<int>{1, 2} ||
      besancenot_preferences(JournalType::SecondTier) != std::set<int>{1, 3}) {
    return fail("journal preference mapping");
  }
  return {true, "100 parameter sets x 5 revenues equal; R_H1 pole raises DivisionByZero; preferences {1} {1,2} {1,3}"};
}

// AC8: replicator invariants and convergence to OA.
Outcome ac8() {
  const auto g = publishing_game_3x3(canonical_publishing_values());
  const auto a = replicator_simulate(g, {{1.0 / 3, 1.0 / 3, 1.0 / 3}}, 0.0, 0.0, 1000);
  const auto b = replicator_simulate(g, {{1.0 / 3, 1.0 / 3, 1.0 / 3}}, 0.0, 0.0, 1000);
  std::optional<std::size_t> reached;
  for (std::size_t t = 0; t < a.states.size(); ++t) {
    const auto& x = a.states[t].shares;
    if (std::abs(x[0] + x[1] + x[2] - 1.0) > 1e-12) return fail("simplex sum off at step " + std::to_string(t));
    if (std::memcmp(x.data(), b.states[t].shares.data(), x.size() * sizeof(double)) != 0) {
      return fail("repeated run differs at step " + std::to_string(t));
    }
    if (t > 0 && x[0] < a.states[t - 1].shares[0]) return fail("OA share decreases at step " + std::to_string(t));
    if (!reached && x[0] >= 0.99) reached = t;
  }
  if (!reached) return fail("OA share never reaches 0.99 within 1000 steps");
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> x{u(rng), u(rng), u(rng)};
    const double s = x[0] + x[1] + x[2];
    for (double& v : x) v /= s;
    for (const auto& st : replicator_simulate(g, {x}, u(rng) * 20, 0.0, 500).states) {
      if (std::abs(st.shares[0] + st.shares[1] + st.shares[2] - 1.0) > 1e-12) return fail("simplex sum off");
    }
  }
  return {true, "OA share nondecreasing, >= 0.99 at step " + std::to_string(*reached) +
                    "; simplex within 1e-12 on 51 runs; repeat bitwise identical"};
}

// True when every recorded elimination is a valid dominance at the time it is made.
bool trace_explains(const NormalFormGame& g, const EliminationTrace& t, DominanceKind kind) {
  auto rows = g.strategies(Player::Row);
  auto cols = g.strategies(Player::Col);
  for (const auto& s : t.steps) {
    if (s.removed.empty() || s.dominator.empty() || s.removed == s.dominator) return false;
    auto& own = s.player == Player::Row ? rows : cols;
    const auto& opp = s.player == Player::Row ? cols : rows;
    const std::size_t a = *g.index_of(s.player, s.dominator), b = *g.index_of(s.player, s.removed);
    bool ge = true, gt_any = false, gt_all = true;
    for (const auto& o : opp) {
      const auto oi = *g.index_of(opponent(s.player), o);
      const auto& va = g.payoff_of(s.player, a, oi);
      const auto& vb = g.payoff_of(s.player, b, oi);
      ge = ge && va >= vb;
      gt_any = gt_any || va > vb;
      gt_all = gt_all && va > vb;
    }
    if (kind == DominanceKind::Strict ? !gt_all : !(ge && gt_any)) return false;
    if ((s.kind == DominanceKind::Strict) != gt_all) return false;
    const auto it = std::find(own.begin(), own.end(), s.removed);
    if (it == own.end()) return false;
    own.erase(it);
  }
  return rows == t.reduced().strategies(Player::Row) && cols == t.reduced().strategies(Player::Col);
}

// AC9: weak IEDS order sensitivity on the publishing game; strict IEDS order independence.
Outcome ac9() {
  const auto cs = default_constraints(false);
  std::size_t differing = 0;
  std::string example;
  for (const auto& split : epsilon_split(cs)) {
    for (const auto& e : linear_extensions(split)) {
      const auto g = publishing_game_3x3(canonical_instantiation(e));
      const auto inst = ieds(g, {DominanceKind::Weak, PlayerOrder::RowFirst});
      const auto pub = ieds(g, {DominanceKind::Weak, PlayerOrder::ColFirst});
      if (!trace_explains(g, inst, DominanceKind::Weak) || !trace_explains(g, pub, DominanceKind::Weak)) {
        return fail("an elimination step is not justified on " + e.to_string());
      }
      const auto a = profile_set(inst.reduced()), b = profile_set(pub.reduced());
      if (a != b) {
        ++differing;
        if (example.empty()) example = e.to_string() + ": institution-first " + a + ", publisher-first " + b;
      }
    }
  }
  if (differing == 0) return fail("no 0 placement separates the two orders");

  std::mt19937_64 rng(9);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto g = s % 2 == 0 ? publishing_game_3x3(sample_instantiation(cs, s)) : oracle::random_game(rng, 3, -3, 3);
    std::string ref;
    for (auto order : {PlayerOrder::RowFirst, PlayerOrder::ColFirst, PlayerOrder::Alternating}) {
      const auto t = ieds(g, {DominanceKind::Strict, order});
      if (!trace_explains(g, t, DominanceKind::Strict)) return fail("strict step not justified");
      const auto got = oracle::labels(t.reduced());
      if (ref.empty()) ref = got;
      if (got != ref) return fail("strict IEDS depends on order for sample " + std::to_string(s));
    }
  }
  return {true, std::to_string(differing) + " placement(s) differ, e.g. " + example +
                    "; strict IEDS order-independent on 200 games"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}};
  const double limits[] = {1.0, 1.0, 0.0, 5.0, 0.0, 30.0, 0.0, 0.0, 0.0};  // seconds; 0 means no bound
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && limits[i] > 0 && secs >= limits[i]) {
      o = fail("took " + std::to_string(secs) + " s, bound " + std::to_string(limits[i]) + " s");
    }
    failures += !o.pass;
    std::printf("%s %s (%.3f s) %s\n", criteria[i].first, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
