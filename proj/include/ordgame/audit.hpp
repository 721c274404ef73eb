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
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "ordgame/dynamics.hpp"
#include "ordgame/error.hpp"
#include "ordgame/mixed.hpp"
#include "ordgame/models.hpp"
#include "ordgame/ordinal.hpp"

namespace ordgame {

enum class ClaimStatus { HoldsForAll, HoldsConditionally, FailsWithCounterexample, NotWellFormed, TextualInconsistency };

constexpr const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::HoldsForAll: return "HoldsForAll";
    case ClaimStatus::HoldsConditionally: return "HoldsConditionally";
    case ClaimStatus::FailsWithCounterexample: return "FailsWithCounterexample";
    case ClaimStatus::NotWellFormed: return "NotWellFormed";
    case ClaimStatus::TextualInconsistency: return "TextualInconsistency";
  }
  return "?";
}

enum class ClaimKind { Ordinal, Formula, Computed, Textual };

struct Anchor {
  std::string location;
  std::string statement;  // neutral restatement of what is asserted
};

/// One checkable statement; a claim holds when all its parts hold.
struct ClaimPart {
  std::string statement;
  std::optional<SymbolicGame> game;           // with `predicate`: evaluated by holds_for_all
  std::optional<OrdinalPredicate> predicate;
  std::function<bool(const Instantiation&)> check;  // always set; used for re-verification
  bool sampled = false;  // `check` is cardinal: also run on random instantiations
};

struct Claim {
  std::string id;
  Anchor anchor;
  ClaimKind kind = ClaimKind::Ordinal;
  std::vector<ClaimPart> parts;
  std::string asserted;        // outcome the source text asserts
  ClaimStatus expected_status;  // outcome this library documents
  std::string note;
};

// ---------------------------------------------------------------------------
// Registry

namespace detail {

inline StrategyProfile pub_profile(const std::string& row, const std::string& col) {
  const auto labels = business_model_labels();
  auto idx = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), s) - labels.begin());
  };
  return {idx(row), idx(col)};
}

inline ClaimPart ordinal_part(std::string statement, SymbolicGame game, OrdinalPredicate pred) {
  ClaimPart p;
  p.statement = std::move(statement);
  p.check = [game, pred](const Instantiation& v) { return evaluate(game.instantiate(v), pred); };
  p.game = std::move(game);
  p.predicate = std::move(pred);
  return p;
}

// Printed row-indifference expression (alpha - alpha* - omega* + omega') / (omega' + alpha*).
inline std::optional<Rational> printed_q(const Instantiation& v) {
  const Rational den = v.at(sym::omega_p) + v.at(sym::alpha_star);
  if (den.is_zero()) return std::nullopt;
  return (v.at(sym::alpha) - v.at(sym::alpha_star) - v.at(sym::omega_star) + v.at(sym::omega_p)) / den;
}

inline bool converges_to_oa(const Instantiation& v) {
  const auto g = publishing_game_3x3(v);
  Rational low = g.payoff(0, 0).row;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) low = std::min(low, g.payoff(r, c).row);
  }
  const double shift = low > 0 ? 0.0 : 1.0 - low.to_double();
  const auto tr = replicator_simulate(g, {{1.0 / 3, 1.0 / 3, 1.0 / 3}}, 0.0, shift, 1000);
  return tr.stats.converged_to == std::optional<std::size_t>(0);
}

}  // namespace detail

inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = [] {
    using detail::ordinal_part;
    using detail::pub_profile;
    const auto g3 = publishing_symbolic_3x3();
    const auto g2 = publishing_symbolic_2x2();
    const IedsPolicy row_first{DominanceKind::Weak, PlayerOrder::RowFirst};
    const IedsPolicy col_first{DominanceKind::Weak, PlayerOrder::ColFirst};
    std::vector<Claim> out;

    out.push_back({"C1",
                   {"iterated-elimination summary table, institution-first row",
                    "eliminating institution strategies first ends at (OA,OA)"},
                   ClaimKind::Ordinal,
                   {ordinal_part("weak IEDS (institution first) reduces to (OA,OA)", g3,
                                 IedsReducesTo{row_first, pub_profile("OA", "OA")})},
                   "holds for all admissible payoffs",
                   ClaimStatus::HoldsConditionally,
                   "the accompanying argument compares alpha_star with omega_pp; the matrix cell holds alpha_p, "
                   "which is what is evaluated"});

    out.push_back({"C2",
                   {"iterated-elimination summary table, publisher-first row",
                    "eliminating publisher strategies first ends at (OA,H)"},
                   ClaimKind::Ordinal,
                   {ordinal_part("weak IEDS (publisher first) reduces to (OA,H)", g3,
                                 IedsReducesTo{col_first, pub_profile("OA", "H")})},
                   "holds for all admissible payoffs",
                   ClaimStatus::FailsWithCounterexample,
                   "publisher OA is not dominated by C (beta_pp > beta_p), so H is never the sole survivor"});

    out.push_back({"C3",
                   {"pure-equilibrium discussion of the 3x3 game",
                    "the game has two pure equilibria, (OA,OA) and (C,OA)"},
                   ClaimKind::Ordinal,
                   {ordinal_part("(OA,OA) is a pure Nash equilibrium", g3, ProfileIsPureNash{pub_profile("OA", "OA")}),
                    ordinal_part("(C,OA) is a pure Nash equilibrium", g3, ProfileIsPureNash{pub_profile("C", "OA")})},
                   "both hold for all admissible payoffs",
                   ClaimStatus::FailsWithCounterexample,
                   "the accompanying argument compares alpha with omega_pp; the matrix cell holds alpha_p, which is "
                   "what is evaluated"});

    out.push_back({"C4",
                   {"concluding discussion", "the pure equilibria found are Pareto optimal"},
                   ClaimKind::Ordinal,
                   {ordinal_part("(OA,OA) is Pareto optimal", g3, ProfileParetoOptimal{pub_profile("OA", "OA")})},
                   "holds for all admissible payoffs",
                   ClaimStatus::FailsWithCounterexample,
                   "(C,OA) is not an equilibrium (see C3), so only (OA,OA) is checked"});

    out.push_back({"C5",
                   {"mixed-strategy discussion of the OA/H game", "the best-response curves meet only at p = q = 1"},
                   ClaimKind::Ordinal,
                   {ordinal_part("the unique 2x2 equilibrium is p=1, q=1", g2,
                                 Mixed2x2EquilibriumEquals{Rational(1), Rational(1)})},
                   "holds for all admissible payoffs",
                   ClaimStatus::HoldsForAll,
                   ""});

    out.push_back({"C6",
                   {"dominance summary after the two dominance tables",
                    "institution OA weakly dominates C and strictly dominates H; publisher OA is strictly dominated "
                    "by C and weakly dominated by H"},
                   ClaimKind::Ordinal,
                   {ordinal_part("institution OA weakly dominates C", g3,
                                 StrategyDominated{Player::Row, 1, DominanceKind::Weak, 0}),
                    ordinal_part("institution OA strictly dominates H", g3,
                                 StrategyDominated{Player::Row, 2, DominanceKind::Strict, 0}),
                    ordinal_part("publisher C strictly dominates OA", g3,
                                 StrategyDominated{Player::Col, 0, DominanceKind::Strict, 1}),
                    ordinal_part("publisher H weakly dominates OA", g3,
                                 StrategyDominated{Player::Col, 0, DominanceKind::Weak, 2})},
                   "all four hold for all admissible payoffs",
                   ClaimStatus::FailsWithCounterexample,
                   "the publisher dominance table compares payoffs along the wrong axis; standard dominance is used"});

    {
      Claim c{"C7",
              {"mixed-strategy discussion, printed threshold algebra",
               "q = (alpha - alpha_star - omega_star + omega_p) / (omega_p + alpha_star), and the publisher "
               "indifference reduces to alpha_p = omega_pp"},
              ClaimKind::Formula,
              {},
              "the printed expressions give the indifference thresholds",
              ClaimStatus::FailsWithCounterexample,
              "evaluated on the canonical and on sampled instantiations of every extension"};
      ClaimPart q;
      q.statement = "printed q expression equals the solver's row-indifference threshold";
      q.check = [](const Instantiation& v) {
        const auto t = indifference_thresholds(publishing_game_2x2(v));
        const auto printed = detail::printed_q(v);
        return printed.has_value() == t.q_star.has_value() && (!printed || *printed == *t.q_star);
      };
      q.sampled = true;
      ClaimPart eq;
      eq.statement = "publisher indifference condition alpha_p = omega_pp is satisfied";
      eq.check = [](const Instantiation& v) { return v.at(sym::alpha_p) == v.at(sym::omega_pp); };
      c.parts = {std::move(q), std::move(eq)};
      out.push_back(std::move(c));
    }

    out.push_back({"C8",
                   {"iterated-elimination summary table, publisher-first row",
                    "the row's comment lists (C,H) and (H,H) while its result column lists (OA,H)"},
                   ClaimKind::Textual,
                   {},
                   "a single publisher-first outcome",
                   ClaimStatus::TextualInconsistency,
                   "the two entries of the same row name different outcomes; no ordering decides between them"});

    {
      Claim c{"C9",
              {"generalization discussion", "all players converge on the OA model"},
              ClaimKind::Computed,
              {},
              "convergence to OA",
              ClaimStatus::HoldsForAll,
              "replicator run with h=0 from (1/3,1/3,1/3) for 1000 steps, threshold 0.99"};
      ClaimPart mixed;
      mixed.statement = "the 2x2 OA/H game has the unique equilibrium p=1, q=1";
      mixed.check = [](const Instantiation& v) {
        const auto eqs = mixed_2x2(publishing_game_2x2(v));
        return eqs.size() == 1 && eqs.front().profile == MixedProfile{{1, 0}, {1, 0}};
      };
      ClaimPart shares;
      shares.statement = "institution shares converge to OA under replicator dynamics without herding";
      shares.check = detail::converges_to_oa;
      c.parts = {std::move(mixed), std::move(shares)};
      out.push_back(std::move(c));
    }
    return out;
  }();
  return registry;
}

inline const Claim& find_claim(const std::string& id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::UnknownClaim, "unknown claim '" + id + "'");
}

// ---------------------------------------------------------------------------
// Evaluation

struct PartResult {
  std::string statement;
  ClaimStatus status = ClaimStatus::HoldsForAll;
  std::optional<OrderConstraint> condition;
  std::optional<Instantiation> counterexample;
  bool exhaustive = true;
  std::string explanation;
};

namespace detail {

inline constexpr std::uint64_t kAuditSeed = 20240601;
inline constexpr std::size_t kAuditSamples = 16;

inline UniversalResult run_part(const ClaimPart& part, const OrderingConstraintSet& cs,
                                std::vector<OrderConstraint> condition = {}) {
  HoldsForAllOptions opt;
  opt.condition = std::move(condition);
  opt.seed = kAuditSeed;
  opt.samples_per_extension = kAuditSamples;
  if (part.predicate) return holds_for_all(*part.game, cs, *part.predicate, opt);
  return check_all_extensions(
      cs,
      [&](const LinearExtension& e) {
        ExtensionOutcome out;
        auto canon = canonical_instantiation(e);
        if (!part.check(canon)) {
          out.failure = std::move(canon);
          return out;
        }
        if (!part.sampled) return out;
        out.sampled = true;
        for (std::size_t s = 0; s < kAuditSamples; ++s) {
          auto v = sample_instantiation_for(e, kAuditSeed * 1000003ULL + e.index * 7919ULL + s);
          if (!part.check(v)) {
            out.failure = std::move(v);
            break;
          }
        }
        return out;
      },
      opt);
}

inline bool part_holds(const ClaimPart& part, const OrderingConstraintSet& cs) { return run_part(part, cs).holds(); }

inline std::string format_values(const Instantiation& v, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) {
    if (auto it = v.find(n); it != v.end()) s += (s.empty() ? "" : ", ") + n + "=" + it->second.to_string();
  }
  return s;
}

inline std::string profiles_text(const NormalFormGame& g, const std::vector<StrategyProfile>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + g.profile_label(p);
  return s.empty() ? "none" : s;
}

// Why `pred` fails on `g`.
inline std::string explain_failure(const NormalFormGame& g, const OrdinalPredicate& pred) {
  return std::visit(
      [&](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ProfileIsPureNash>) {
          for (Player who : {Player::Row, Player::Col}) {
            const std::size_t own = who == Player::Row ? p.profile.row : p.profile.col;
            const std::size_t opp = who == Player::Row ? p.profile.col : p.profile.row;
            const auto br = best_responses(g, who, opp);
            if (std::find(br.begin(), br.end(), own) != br.end()) continue;
            const auto dev = br.front();
            const std::string name = who == Player::Row ? g.row_label() : g.col_label();
            return name + " deviates from " + g.strategy_label(who, own) + " to " + g.strategy_label(who, dev) + ": " +
                   g.payoff_of(who, dev, opp).to_string() + " > " + g.payoff_of(who, own, opp).to_string();
          }
          return "profile is an equilibrium";
        } else if constexpr (std::is_same_v<P, IedsReducesTo>) {
          const auto t = ieds(g, p.policy);
          const auto& r = t.reduced();
          std::string rest;
          for (std::size_t i = 0; i < r.rows(); ++i) {
            for (std::size_t j = 0; j < r.cols(); ++j) rest += (rest.empty() ? "" : ", ") + r.profile_label({i, j});
          }
          std::string steps;
          for (const auto& s : t.steps) {
            steps += (steps.empty() ? "" : "; ") + std::string(to_string(s.player)) + " drops " +
                     s.removed + " (" + (s.kind == DominanceKind::Strict ? "strictly" : "weakly") + " by " +
                     s.dominator + ")";
          }
          return "elimination ends at " + rest + " [" + steps + "]";
        } else if constexpr (std::is_same_v<P, StrategyDominated>) {
          return std::string(to_string(p.player)) + " " + g.strategy_label(p.player, p.strategy) + " is not " +
                 (p.kind == DominanceKind::Strict ? "strictly" : "weakly") + " dominated" +
                 (p.dominator ? " by " + g.strategy_label(p.player, *p.dominator) : std::string());
        } else if constexpr (std::is_same_v<P, ProfileParetoOptimal>) {
          return "Pareto-dominated by " + profiles_text(g, pareto_status(g, p.profile).dominated_by);
        } else {
          std::string s;
          for (const auto& e : mixed_2x2(g)) {
            s += (s.empty() ? "" : ", ") + std::string("(p=") + e.profile.row[0].to_string() +
                 ", q=" + e.profile.col[0].to_string() + ")";
          }
          return "equilibria: " + s;
        }
      },
      pred);
}

inline std::string explain_part(const ClaimPart& part, const Instantiation& v) {
  if (part.predicate) return explain_failure(part.game->instantiate(v), *part.predicate);
  if (part.sampled) {
    const auto t = indifference_thresholds(publishing_game_2x2(v));
    const auto printed = printed_q(v);
    return "printed q = " + (printed ? printed->to_string() : std::string("undefined")) +
           ", solver q* = " + (t.q_star ? t.q_star->to_string() : std::string("none (dominance)"));
  }
  return "alpha_p=" + v.at(sym::alpha_p).to_string() + ", omega_pp=" + v.at(sym::omega_pp).to_string() +
         " while the order requires alpha_p > omega_pp";
}

}  // namespace detail

/*
 * Every part is checked over all placements of 0 in the publisher chain. A
 * part failing somewhere is retried under "s > 0" for each publisher symbol,
 * top of the chain first; the first condition that suffices is reported.
 * With `nonnegativity` the counterexample is drawn from the anchored set.
 */
inline PartResult evaluate_part(const ClaimPart& part, bool nonnegativity) {
  PartResult r;
  r.statement = part.statement;
  const auto all = default_constraints(false);
  const auto base = detail::run_part(part, all);
  r.exhaustive = base.exhaustive;
  if (base.holds()) return r;
  for (const auto& s : publisher_symbols()) {
    OrderConstraint cond{s, Relation::Greater, Rational(0)};
    if (detail::run_part(part, all, {cond}).holds()) {
      r.status = ClaimStatus::HoldsConditionally;
      r.condition = cond;
      r.counterexample = base.counterexample;
      r.explanation = "fails when " + s + " <= 0: " + detail::explain_part(part, *base.counterexample);
      return r;
    }
  }
  r.status = ClaimStatus::FailsWithCounterexample;
  r.counterexample = base.counterexample;
  if (nonnegativity) {
    const auto anchored = detail::run_part(part, default_constraints(true));
    if (!anchored.holds()) r.counterexample = anchored.counterexample;
  }
  r.explanation = detail::explain_part(part, *r.counterexample);
  return r;
}

/// True iff the part's check fails on `v` (counterexample re-verification).
inline bool reproduces_failure(const ClaimPart& part, const Instantiation& v) { return !part.check(v); }

// ---------------------------------------------------------------------------
// Repairs

struct SwapAdjacent {
  std::string upper, lower;
  friend bool operator==(const SwapAdjacent&, const SwapAdjacent&) = default;
};
struct RelaxToApprox {
  std::string upper, lower;
  friend bool operator==(const RelaxToApprox&, const RelaxToApprox&) = default;
};
/// Places 0 strictly between `above` and `below`; an empty side means the
/// end of the chain.
struct MoveZero {
  std::optional<std::string> above, below;
  friend bool operator==(const MoveZero&, const MoveZero&) = default;
};

using ConstraintEdit = std::variant<SwapAdjacent, RelaxToApprox, MoveZero>;

inline std::string describe(const ConstraintEdit& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using E = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<E, SwapAdjacent>) {
          return "swap " + x.upper + " and " + x.lower + " (" + x.lower + " > " + x.upper + ")";
        } else if constexpr (std::is_same_v<E, RelaxToApprox>) {
          return "relax " + x.upper + " > " + x.lower + " to " + x.upper + " ~= " + x.lower;
        } else {
          return "place 0 " + (x.above && x.below ? "between " + *x.above + " and " + *x.below
                               : x.above          ? "below " + *x.above
                                                  : "above " + x.below.value_or("?"));
        }
      },
      e);
}

inline OrderingConstraintSet apply_edit(const OrderingConstraintSet& cs, const ConstraintEdit& edit) {
  auto out = cs;
  auto cons = cs.constraints();
  std::visit(
      [&](const auto& x) {
        using E = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<E, SwapAdjacent>) {
          auto swap_term = [&](Term& t) {
            if (!is_symbol(t)) return;
            auto& s = std::get<std::string>(t);
            if (s == x.upper) s = x.lower;
            else if (s == x.lower) s = x.upper;
          };
          for (auto& c : cons) {
            swap_term(c.lhs);
            swap_term(c.rhs);
          }
        } else if constexpr (std::is_same_v<E, RelaxToApprox>) {
          for (auto& c : cons) {
            if (c.rel == Relation::Greater && c.lhs == Term(x.upper) && c.rhs == Term(x.lower)) c.rel = Relation::Approx;
          }
        } else {
          const Term zero = Rational(0);
          auto publisher_term = [&](const Term& t) { return is_symbol(t) && cs.group_of(std::get<std::string>(t)) == kPublisher; };
          std::erase_if(cons, [&](const OrderConstraint& c) {
            return (c.lhs == zero && publisher_term(c.rhs)) || (c.rhs == zero && publisher_term(c.lhs));
          });
          if (x.above) cons.push_back({*x.above, Relation::Greater, zero});
          if (x.below) cons.push_back({zero, Relation::Greater, *x.below});
          auto free = cs.free_literals();
          std::erase_if(free, [](const FreeLiteral& f) { return f.group == kPublisher && f.value == 0; });
          out.set_free_literals(std::move(free));
        }
      },
      edit);
  out.set_constraints(std::move(cons));
  return out;
}

/// Candidate single edits in deterministic order.
inline std::vector<ConstraintEdit> candidate_edits(const OrderingConstraintSet& cs) {
  std::vector<ConstraintEdit> out;
  std::vector<std::pair<std::string, std::string>> pub_pairs;
  for (const auto& c : cs.constraints()) {
    if (c.rel != Relation::Greater || !is_symbol(c.lhs) || !is_symbol(c.rhs)) continue;
    const auto& a = std::get<std::string>(c.lhs);
    const auto& b = std::get<std::string>(c.rhs);
    out.push_back(SwapAdjacent{a, b});
    out.push_back(RelaxToApprox{a, b});
    if (cs.group_of(a) == kPublisher && cs.group_of(b) == kPublisher) pub_pairs.emplace_back(a, b);
  }
  std::vector<std::string> pubs;
  for (const auto& s : cs.symbols()) {
    if (cs.group_of(s) == kPublisher) pubs.push_back(s);
  }
  if (pubs.empty()) return out;
  auto appears = [&](const std::string& s, bool as_upper) {
    return std::any_of(pub_pairs.begin(), pub_pairs.end(),
                       [&](const auto& p) { return (as_upper ? p.first : p.second) == s; });
  };
  for (const auto& s : pubs) {
    if (!appears(s, false)) out.push_back(MoveZero{std::nullopt, s});  // above the top
  }
  for (const auto& [a, b] : pub_pairs) out.push_back(MoveZero{a, b});
  for (const auto& s : pubs) {
    if (!appears(s, true)) out.push_back(MoveZero{s, std::nullopt});  // below the bottom
  }
  return out;
}

enum class RepairKind { AlreadyHolds, Repaired, NoRepairWithinBudget, UnrepairableTextual, NotOrdinal };

constexpr const char* to_string(RepairKind k) {
  switch (k) {
    case RepairKind::AlreadyHolds: return "AlreadyHolds";
    case RepairKind::Repaired: return "Repaired";
    case RepairKind::NoRepairWithinBudget: return "NoRepairWithinBudget";
    case RepairKind::UnrepairableTextual: return "UnrepairableTextual";
    case RepairKind::NotOrdinal: return "NotOrdinal";
  }
  return "?";
}

struct Repair {
  std::vector<ConstraintEdit> edits;
  OrderingConstraintSet constraints;
};

struct RepairResult {
  RepairKind kind = RepairKind::AlreadyHolds;
  std::vector<Repair> repairs;  // all repairs of minimal edit count
};

inline bool claim_holds_for_all(const Claim& claim, const OrderingConstraintSet& cs) {
  return std::all_of(claim.parts.begin(), claim.parts.end(),
                     [&](const ClaimPart& p) { return detail::part_holds(p, cs); });
}

/*
 * Breadth-first over edit sequences up to `max_edits` (<= 3). Returns every
 * valid constraint set, reached with the fewest edits, under which all parts
 * of the claim hold for every extension.
 */
inline RepairResult repair_search(const std::string& claim_id, const OrderingConstraintSet& cs,
                                  std::size_t max_edits = 1) {
  const Claim& claim = find_claim(claim_id);
  if (max_edits > 3) throw Error(ErrorCode::DomainError, "max_edits must be <= 3");
  if (claim.kind == ClaimKind::Textual) return {RepairKind::UnrepairableTextual, {}};
  if (claim.kind == ClaimKind::Formula) return {RepairKind::NotOrdinal, {}};
  if (claim_holds_for_all(claim, cs)) return {RepairKind::AlreadyHolds, {}};
  std::vector<Repair> frontier{{{}, cs}};
  std::set<std::string> seen{cs.to_text()};
  for (std::size_t depth = 1; depth <= max_edits; ++depth) {
    std::vector<Repair> next;
    std::vector<Repair> found;
    for (const auto& node : frontier) {
      for (const auto& edit : candidate_edits(node.constraints)) {
        auto edited = apply_edit(node.constraints, edit);
        if (!seen.insert(edited.to_text()).second) continue;
        if (!validate(edited).ok) continue;
        Repair r{node.edits, std::move(edited)};
        r.edits.push_back(edit);
        if (claim_holds_for_all(claim, r.constraints)) found.push_back(r);
        next.push_back(std::move(r));
      }
    }
    if (!found.empty()) return {RepairKind::Repaired, std::move(found)};
    frontier = std::move(next);
  }
  return {RepairKind::NoRepairWithinBudget, {}};
}

// ---------------------------------------------------------------------------
// Report

struct ClaimResult {
  std::string id;
  Anchor anchor;
  ClaimKind kind = ClaimKind::Ordinal;
  std::string asserted;
  ClaimStatus status = ClaimStatus::HoldsForAll;
  bool partial = false;  // some parts hold while another fails
  std::vector<PartResult> parts;
  std::string explanation;
  ClaimStatus expected_status = ClaimStatus::HoldsForAll;
  RepairResult repair;

  bool matches_expected() const { return status == expected_status; }
};

struct AuditReport {
  bool nonnegativity = true;
  std::vector<ClaimResult> claims;
};

inline ClaimResult evaluate_claim(const Claim& claim, bool nonnegativity) {
  ClaimResult out;
  out.id = claim.id;
  out.anchor = claim.anchor;
  out.kind = claim.kind;
  out.asserted = claim.asserted;
  out.expected_status = claim.expected_status;
  out.explanation = claim.note;
  if (claim.kind == ClaimKind::Textual) {
    out.status = ClaimStatus::TextualInconsistency;
    out.repair = {RepairKind::UnrepairableTextual, {}};
    return out;
  }
  bool any_fail = false;
  bool any_cond = false;
  bool any_hold = false;
  for (const auto& part : claim.parts) {
    out.parts.push_back(evaluate_part(part, nonnegativity));
    const auto s = out.parts.back().status;
    any_fail |= s == ClaimStatus::FailsWithCounterexample;
    any_cond |= s == ClaimStatus::HoldsConditionally;
    any_hold |= s != ClaimStatus::FailsWithCounterexample;
  }
  out.status = any_fail ? ClaimStatus::FailsWithCounterexample
               : any_cond ? ClaimStatus::HoldsConditionally
                          : ClaimStatus::HoldsForAll;
  out.partial = any_fail && any_hold;
  out.repair = repair_search(claim.id, default_constraints(nonnegativity), 1);
  return out;
}

struct AuditOptions {
  bool nonnegativity = true;
  std::size_t threads = 0;  // 0: hardware concurrency
};

/// Claims are evaluated independently (possibly in parallel); the report is
/// ordered by claim id.
inline AuditReport run_audit(const AuditOptions& options = {}) {
  const auto& claims = claim_registry();
  AuditReport report;
  report.nonnegativity = options.nonnegativity;
  report.claims.resize(claims.size());
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, claims.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < claims.size(); ++i) report.claims[i] = evaluate_claim(claims[i], options.nonnegativity);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < claims.size(); i += threads) {
            report.claims[i] = evaluate_claim(claims[i], options.nonnegativity);
          }
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
  std::sort(report.claims.begin(), report.claims.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace ordgame
