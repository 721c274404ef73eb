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

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordgame/error.hpp"
#include "ordgame/game.hpp"
#include "ordgame/ordinal.hpp"
#include "ordgame/rational.hpp"

namespace ordgame {

enum class BusinessModel { OA = 0, C = 1, H = 2 };

constexpr const char* to_string(BusinessModel m) {
  switch (m) {
    case BusinessModel::OA: return "OA";
    case BusinessModel::C: return "C";
    case BusinessModel::H: return "H";
  }
  return "?";
}

inline constexpr std::array<BusinessModel, 3> kBusinessModels{BusinessModel::OA, BusinessModel::C, BusinessModel::H};

/// A non-fatal finding attached to an otherwise valid result.
struct ConsistencyWarning {
  std::string message;

  friend bool operator==(const ConsistencyWarning&, const ConsistencyWarning&) = default;
};

template <typename T>
struct Checked {
  T value;
  std::vector<ConsistencyWarning> warnings;
};

// ---------------------------------------------------------------------------
// Publishing game

namespace sym {
inline const std::string alpha = "alpha";
inline const std::string alpha_star = "alpha_star";
inline const std::string beta = "beta";
inline const std::string beta_star = "beta_star";
inline const std::string omega = "omega";
inline const std::string omega_star = "omega_star";
inline const std::string alpha_p = "alpha_p";
inline const std::string alpha_pp = "alpha_pp";
inline const std::string beta_p = "beta_p";
inline const std::string beta_pp = "beta_pp";
inline const std::string beta_ppp = "beta_ppp";
inline const std::string omega_p = "omega_p";
inline const std::string omega_pp = "omega_pp";
}  // namespace sym

inline const std::string kInstitution = "institution";
inline const std::string kPublisher = "publisher";

inline std::vector<std::string> institution_symbols() {
  return {sym::alpha, sym::alpha_star, sym::omega_star, sym::beta_star, sym::beta, sym::omega};
}

inline std::vector<std::string> publisher_symbols() {
  return {sym::omega_p, sym::beta_ppp, sym::beta_pp, sym::beta_p, sym::alpha_pp, sym::alpha_p, sym::omega_pp};
}

/*
 * Institution: alpha > alpha_star ~= omega_star > beta_star > beta > omega.
 * Publisher:   omega_p > beta_ppp > beta_pp > beta_p > alpha_pp > alpha_p > omega_pp.
 * With `nonnegativity` every symbol is anchored above 0; otherwise 0 is a
 * free literal placed anywhere in the publisher chain.
 */
inline OrderingConstraintSet default_constraints(bool nonnegativity = true) {
  OrderingConstraintSet cs;
  auto chain = [&](const std::vector<std::string>& names, const std::string& group) {
    for (const auto& n : names) cs.declare(n, group);
    for (std::size_t i = 0; i + 1 < names.size(); ++i) {
      const bool tie = names[i] == sym::alpha_star && names[i + 1] == sym::omega_star;
      cs.add(names[i], tie ? Relation::Approx : Relation::Greater, names[i + 1], group);
    }
  };
  chain(institution_symbols(), kInstitution);
  chain(publisher_symbols(), kPublisher);
  if (nonnegativity) {
    for (const auto& s : institution_symbols()) cs.add(s, Relation::Greater, Rational(0), kInstitution);
    for (const auto& s : publisher_symbols()) cs.add(s, Relation::Greater, Rational(0), kPublisher);
  } else {
    cs.add_free_literal(Rational(0), kPublisher);
  }
  return cs;
}

inline std::vector<std::string> business_model_labels() { return {"OA", "C", "H"}; }

inline SymbolicGame publishing_symbolic_3x3() {
  const Term zero = Rational(0);
  using C = SymbolicCell;
  return SymbolicGame::make(kInstitution, kPublisher, business_model_labels(), business_model_labels(),
                            {{C{sym::alpha, sym::alpha_p}, C{sym::alpha_star, zero}, C{sym::alpha_star, sym::omega_pp}},
                             {C{sym::alpha, sym::beta_pp}, C{sym::beta, sym::beta_p}, C{sym::beta_star, sym::beta_ppp}},
                             {C{sym::omega_star, sym::omega_p}, C{sym::alpha_star, zero}, C{sym::omega, sym::omega_p}}});
}

inline SymbolicGame publishing_symbolic_2x2() {
  using C = SymbolicCell;
  return SymbolicGame::make(kInstitution, kPublisher, {"OA", "H"}, {"OA", "H"},
                            {{C{sym::alpha, sym::alpha_p}, C{sym::alpha_star, sym::omega_pp}},
                             {C{sym::omega_star, sym::omega_p}, C{sym::omega, sym::omega_p}}});
}

inline NormalFormGame publishing_game_3x3(const Instantiation& values) {
  return publishing_symbolic_3x3().instantiate(values);
}

inline NormalFormGame publishing_game_2x2(const Instantiation& values) {
  return publishing_symbolic_2x2().instantiate(values);
}

/// Values of the single extension of default_constraints(true).
inline Instantiation canonical_publishing_values() {
  return canonical_instantiation(linear_extensions(default_constraints(true)).front());
}

// ---------------------------------------------------------------------------
// Utilities and profits

struct PublishingPrimitives {
  Rational p_oa, p_c;
  Rational a_oa, a_c;
  Rational lambda_share;  // OA share within hybrid, in (0, 1/2)
  Rational impact_oa, impact_c;
  std::optional<Rational> impact_h;  // defaults to impact_oa
  std::string notoriety_note;
  Rational cost_oa, cost_c, cost_h;
  Rational phi, apc, s;

  Rational p_h() const { return lambda_share * p_oa + (1 - lambda_share) * p_c; }
  Rational a_h() const { return lambda_share * a_oa + (1 - lambda_share) * a_c; }
  Rational impact(BusinessModel m) const {
    switch (m) {
      case BusinessModel::OA: return impact_oa;
      case BusinessModel::C: return impact_c;
      case BusinessModel::H: return impact_h.value_or(impact_oa);
    }
    return impact_oa;
  }

  void validate() const {
    auto need = [](bool ok, const char* what) {
      if (!ok) throw Error(ErrorCode::DomainError, std::string("publishing primitives: ") + what);
    };
    need(lambda_share > 0 && lambda_share < Rational(1, 2), "lambda_share must lie in (0, 1/2)");
    need(p_oa > p_c, "p_oa > p_c required");
    need(a_oa > a_c, "a_oa > a_c required");
    need(cost_h > cost_c && cost_c > cost_oa, "cost_h > cost_c > cost_oa required");
  }
};

namespace detail {

inline Rational raw_institution_utility(const PublishingPrimitives& x, BusinessModel m) {
  switch (m) {
    case BusinessModel::OA: return x.p_oa + x.a_oa + x.impact_oa - x.cost_oa;
    case BusinessModel::C: return x.p_c + x.a_c + x.impact_c - x.cost_c;
    case BusinessModel::H:
      return x.lambda_share * (x.p_oa + x.a_oa) + (1 - x.lambda_share) * (x.p_c + x.a_c) +
             x.impact(BusinessModel::H) - x.cost_h;
  }
  return {};
}

}  // namespace detail

/// Institution utility of `m`; warns when the three utilities are not
/// ordered OA > C > H.
inline Checked<Rational> institution_utility(const PublishingPrimitives& x, BusinessModel m) {
  x.validate();
  Checked<Rational> out{detail::raw_institution_utility(x, m), {}};
  const auto oa = detail::raw_institution_utility(x, BusinessModel::OA);
  const auto c = detail::raw_institution_utility(x, BusinessModel::C);
  const auto h = detail::raw_institution_utility(x, BusinessModel::H);
  if (!(oa > c && c > h)) {
    out.warnings.push_back({"institution utilities OA=" + oa.to_string() + ", C=" + c.to_string() + ", H=" +
                            h.to_string() + " are not ordered OA > C > H"});
  }
  return out;
}

struct JournalRecord {
  std::string journal;
  BusinessModel model = BusinessModel::C;
  Rational submissions;  // includes rejected papers
  Rational published;
  Rational price;
  Rational fixed_cost;
  Rational unit_variable_cost;
};

struct PublisherLedger {
  std::vector<JournalRecord> records;

  const JournalRecord* find(const std::string& journal, BusinessModel m) const {
    for (const auto& r : records) {
      if (r.journal == journal && r.model == m) return &r;
    }
    return nullptr;
  }
};

/// published * price - (fixed cost + unit cost * submissions)
inline Rational publisher_profit(const PublisherLedger& ledger, const std::string& journal, BusinessModel m) {
  const auto* r = ledger.find(journal, m);
  if (!r) {
    throw Error(ErrorCode::DomainError, "no ledger entry for journal '" + journal + "' under " + to_string(m));
  }
  if (r->published < 0 || r->submissions < r->published) {
    throw Error(ErrorCode::DomainError, "ledger needs submissions >= published >= 0");
  }
  if (r->fixed_cost < 0 || r->unit_variable_cost < 0) throw Error(ErrorCode::DomainError, "ledger costs must be >= 0");
  return r->published * r->price - (r->fixed_cost + r->unit_variable_cost * r->submissions);
}

/// Profit plus impact; warns when the journal's three models are present
/// and not ordered H > C > OA.
inline Checked<Rational> publisher_utility(const PublisherLedger& ledger, const std::string& journal,
                                           const PublishingPrimitives& x, BusinessModel m) {
  Checked<Rational> out{publisher_profit(ledger, journal, m) + x.impact(m), {}};
  for (auto other : kBusinessModels) {
    if (!ledger.find(journal, other)) return out;
  }
  std::array<Rational, 3> u;
  for (auto other : kBusinessModels) {
    u[static_cast<std::size_t>(other)] = publisher_profit(ledger, journal, other) + x.impact(other);
  }
  if (!(u[2] > u[1] && u[1] > u[0])) {
    out.warnings.push_back({"publisher utilities OA=" + u[0].to_string() + ", C=" + u[1].to_string() + ", H=" +
                            u[2].to_string() + " are not ordered H > C > OA"});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hanauske: symmetric open-access game

inline const std::string kOpen = "O";
inline const std::string kClosed = "\xE2\x88\x85";  // U+2205

struct HanauskeParams {
  Rational r;
  Rational alpha;  // reputation loss
  Rational beta;   // reputation gain
  Rational delta;  // mutual open-access bonus

  void validate() const {
    if (alpha < 0 || beta < 0) throw Error(ErrorCode::DomainError, "hanauske: alpha and beta must be >= 0");
  }
};

inline NormalFormGame hanauske_game(const HanauskeParams& x) {
  x.validate();
  return NormalFormGame::make("author_a", "author_b", {kOpen, kClosed}, {kOpen, kClosed},
                              {{{x.r + x.delta, x.r + x.delta}, {x.r - x.alpha, x.r + x.beta}},
                               {{x.r + x.beta, x.r - x.alpha}, {x.r, x.r}}});
}

enum class HanauskeRegime { DefectDominant, StagHunt, Degenerate };

constexpr const char* to_string(HanauskeRegime r) {
  switch (r) {
    case HanauskeRegime::DefectDominant: return "DefectDominant";
    case HanauskeRegime::StagHunt: return "StagHunt";
    case HanauskeRegime::Degenerate: return "Degenerate";
  }
  return "?";
}

inline HanauskeRegime hanauske_regime(const HanauskeParams& x) {
  x.validate();
  if (x.alpha == 0 || x.beta == x.delta) return HanauskeRegime::Degenerate;
  return x.beta > x.delta ? HanauskeRegime::DefectDominant : HanauskeRegime::StagHunt;
}

// ---------------------------------------------------------------------------
// Habermann: authors against publishers

struct HabermannParams {
  Rational R, r, I, tau, L, G, P;

  void validate() const {
    auto need = [](bool ok, const char* what) {
      if (!ok) throw Error(ErrorCode::DomainError, std::string("habermann: ") + what);
    };
    need(R > 0, "R > 0 required");
    need(r > 0 && r < R, "0 < r < R required");
    need(tau > 0 && tau < I, "0 < tau < I required");
    need(L > 0, "L > 0 required");
    need(G > 0, "G > 0 required");
    need(P > 0, "P > 0 required");
  }
};

inline HabermannParams habermann_default_params() { return {10, 2, 5, 1, 2, 3, 4}; }

inline NormalFormGame habermann_game(const HabermannParams& x) {
  x.validate();
  const Rational half_l = x.L / 2;
  return NormalFormGame::make(
      "author", "publisher", {"s1", "s2"}, {"p1", "p2"},
      {{{(x.R - x.r) + x.I - half_l - x.G, x.G + x.I - half_l}, {(x.R - x.r) + x.I - x.L, Rational(0)}},
       {{x.R + (x.I - x.tau) - x.G, x.G + (x.I - x.tau) - x.L},
        {x.R + (x.I - x.tau) - x.G - x.P, x.G + (x.I - x.tau) + x.P}}});
}

// ---------------------------------------------------------------------------
// Besancenot: signalling with author-pays journals

enum class AuthorType { H, L };
enum class AuthorStrategy { A, T };
enum class JournalType { Leading, SpecializedGood, SecondTier };

struct BesancenotParams {
  Rational mu;                 // share of high-quality papers, in (0, 1/2)
  Rational theta_h, theta_l;   // intrinsic qualities
  Rational lambda_w;           // weight on perceived quality, in [0, 1/2)
  Rational delta_a, delta_t;   // readerships
  Rational c;                  // article processing charge
  Rational phi;                // frequency of OA authors, in [0, 1]
  std::optional<Rational> belief_a, belief_t;

  void validate() const {
    auto need = [](bool ok, const char* what) {
      if (!ok) throw Error(ErrorCode::DomainError, std::string("besancenot: ") + what);
    };
    need(mu > 0 && mu < Rational(1, 2), "mu must lie in (0, 1/2)");
    need(theta_h > theta_l && theta_l > 0, "theta_h > theta_l > 0 required");
    need(lambda_w >= 0 && lambda_w < Rational(1, 2), "lambda_w must lie in [0, 1/2)");
    need(delta_a > delta_t && delta_t > 0, "delta_a > delta_t > 0 required");
    need(c >= 0, "c >= 0 required");
    need(phi >= 0 && phi <= 1, "phi must lie in [0, 1]");
  }

  Rational expected_theta() const { return mu * theta_h + (1 - mu) * theta_l; }

  friend bool operator==(const BesancenotParams&, const BesancenotParams&) = default;
};

inline BesancenotParams besancenot_default_params() {
  BesancenotParams p;
  p.mu = Rational(3, 10);
  p.theta_h = 2;
  p.theta_l = 1;
  p.lambda_w = Rational(1, 4);
  p.delta_a = 2;
  p.delta_t = 1;
  p.c = Rational(1, 2);
  p.phi = Rational(1, 2);
  p.belief_a = 2;
  p.belief_t = 1;
  return p;
}

/// delta_S * ((1 - lambda_w) * theta + lambda_w * belief_S) - [S = A] * c
inline Rational besancenot_utility(const BesancenotParams& x, AuthorType type, AuthorStrategy s) {
  x.validate();
  const bool oa = s == AuthorStrategy::A;
  const auto& belief = oa ? x.belief_a : x.belief_t;
  if (!belief) throw Error(ErrorCode::DomainError, std::string("besancenot: belief for strategy ") + (oa ? "A" : "T") + " not supplied");
  const Rational theta = type == AuthorType::H ? x.theta_h : x.theta_l;
  const Rational reach = oa ? x.delta_a : x.delta_t;
  return reach * ((1 - x.lambda_w) * theta + x.lambda_w * *belief) - (oa ? x.c : Rational(0));
}

/*
 * Journal revenue for equilibrium id:
 *   1 separating, 2 pooling on A, 3 pooling on T, 4 and 5 hybrid.
 * Id 5 uses (1 + phi) unless `as_corrected` selects (1 - phi).
 */
inline Rational besancenot_revenue(const BesancenotParams& x, int id, bool as_corrected = false) {
  x.validate();
  switch (id) {
    case 1: return x.c * x.mu + (1 - x.mu) * x.theta_l;
    case 2: return x.c;
    case 3: return x.expected_theta();
    case 4: {
      const Rational den = x.c - (x.delta_a - x.delta_t) * x.theta_l;
      if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "besancenot: revenue 4 has a pole at this c");
      return x.theta_l - x.mu * x.lambda_w * x.delta_a * (x.theta_h - x.theta_l) * ((x.theta_l - x.c) / den);
    }
    case 5: return x.phi * x.c + (as_corrected ? 1 - x.phi : 1 + x.phi) * x.expected_theta();
    default: throw Error(ErrorCode::DomainError, "besancenot: equilibrium id must be 1..5");
  }
}

inline std::set<int> besancenot_preferences(JournalType t) {
  switch (t) {
    case JournalType::Leading: return {1};
    case JournalType::SpecializedGood: return {1, 2};
    case JournalType::SecondTier: return {1, 3};
  }
  return {};
}

}  // namespace ordgame
