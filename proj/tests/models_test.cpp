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


#include "ordgame/models.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace ordgame {
namespace {

using Profiles = std::vector<StrategyProfile>;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Overflow;
}

PublishingPrimitives primitives() {
  PublishingPrimitives x;
  x.p_oa = 10;
  x.p_c = 6;
  x.a_oa = 10;
  x.a_c = 6;
  x.lambda_share = Rational(1, 4);
  x.impact_oa = 5;
  x.impact_c = 4;
  x.impact_h = 5;
  x.cost_oa = 3;
  x.cost_c = 4;
  x.cost_h = 9;
  return x;
}

TEST(PublishingGame, DefaultConstraintExtensions) {
  EXPECT_EQ(linear_extensions(default_constraints(true)).size(), 1u);
  EXPECT_EQ(linear_extensions(default_constraints(false)).size(), 8u);
  EXPECT_TRUE(validate(default_constraints(true)).ok);
}

TEST(PublishingGame, TwoByTwoIsTheRestriction) {
  const auto v = canonical_publishing_values();
  EXPECT_EQ(publishing_game_2x2(v), publishing_game_3x3(v).restrict({0, 2}, {0, 2}));
  const PayoffMatrix expected{{{6, 3}, {5, 2}}, {{5, 8}, {2, 8}}};
  EXPECT_EQ(publishing_game_2x2(v).payoffs(), expected);
}

TEST(PublishingGame, ZeroSymbolsGiveZeroGame) {
  Instantiation v;
  for (const auto& s : publishing_symbolic_2x2().symbols()) v[s] = 0;
  const auto g = publishing_game_2x2(v);
  for (const auto& row : g.payoffs()) {
    for (const auto& cell : row) EXPECT_EQ(cell, (Payoff{0, 0}));
  }
}

TEST(InstitutionUtility, Examples) {
  const auto x = primitives();
  EXPECT_EQ(institution_utility(x, BusinessModel::OA).value, 22);
  EXPECT_EQ(institution_utility(x, BusinessModel::H).value, 10);
  EXPECT_EQ(x.p_h(), 7);
  EXPECT_EQ(x.a_h(), 7);
}

TEST(InstitutionUtility, WarnsWhenHybridBeatsSubscription) {
  auto x = primitives();
  x.impact_c = 0;  // U_C = 8 < U_H = 10
  const auto u = institution_utility(x, BusinessModel::C);
  EXPECT_EQ(u.value, 8);
  ASSERT_EQ(u.warnings.size(), 1u);
  EXPECT_NE(u.warnings[0].message.find("OA > C > H"), std::string::npos);
  x.impact_c = 9;  // U_C = 17 > U_H = 10
  EXPECT_TRUE(institution_utility(x, BusinessModel::C).warnings.empty());
}

TEST(InstitutionUtility, DomainChecks) {
  auto x = primitives();
  x.lambda_share = Rational(1, 2);
  EXPECT_EQ(code_of([&] { institution_utility(x, BusinessModel::OA); }), ErrorCode::DomainError);
  x = primitives();
  x.cost_c = 10;
  EXPECT_EQ(code_of([&] { institution_utility(x, BusinessModel::OA); }), ErrorCode::DomainError);
}

TEST(PublisherProfit, Examples) {
  PublisherLedger ledger;
  ledger.records.push_back({"j", BusinessModel::C, 150, 100, 2, 50, 1});
  ledger.records.push_back({"empty", BusinessModel::C, 0, 0, 5, 50, 1});
  ledger.records.push_back({"diamond", BusinessModel::OA, 150, 100, 0, 50, 1});
  EXPECT_EQ(publisher_profit(ledger, "j", BusinessModel::C), 0);
  EXPECT_EQ(publisher_profit(ledger, "empty", BusinessModel::C), -50);
  EXPECT_EQ(publisher_profit(ledger, "diamond", BusinessModel::OA), -200);
  EXPECT_EQ(code_of([&] { publisher_profit(ledger, "j", BusinessModel::H); }), ErrorCode::DomainError);
  ledger.records.push_back({"bad", BusinessModel::C, 1, 2, 1, 0, 0});
  EXPECT_EQ(code_of([&] { publisher_profit(ledger, "bad", BusinessModel::C); }), ErrorCode::DomainError);
}

TEST(PublisherUtility, ProfitPlusImpact) {
  PublisherLedger ledger;
  ledger.records.push_back({"j", BusinessModel::C, 10, 10, 1, 3, 0});  // profit 7
  auto x = primitives();
  x.impact_c = 5;
  const auto u = publisher_utility(ledger, "j", x, BusinessModel::C);
  EXPECT_EQ(u.value, 12);
  EXPECT_TRUE(u.warnings.empty());
}

TEST(PublisherUtility, NegativeValuesAreNotClamped) {
  PublisherLedger ledger;
  ledger.records.push_back({"d", BusinessModel::OA, 10, 10, 0, 20, 0});
  EXPECT_EQ(publisher_utility(ledger, "d", primitives(), BusinessModel::OA).value, -15);
}

TEST(PublisherUtility, WarnsWhenOaOutearnsHybrid) {
  PublisherLedger ledger;
  ledger.records.push_back({"j", BusinessModel::OA, 10, 10, 9, 0, 0});
  ledger.records.push_back({"j", BusinessModel::C, 10, 10, 2, 0, 0});
  ledger.records.push_back({"j", BusinessModel::H, 10, 10, 3, 0, 0});
  EXPECT_EQ(publisher_utility(ledger, "j", primitives(), BusinessModel::H).warnings.size(), 1u);
}

TEST(Hanauske, GameValues) {
  const PayoffMatrix pd{{{5, 5}, {3, 6}}, {{6, 3}, {4, 4}}};
  EXPECT_EQ(hanauske_game({4, 1, 2, 1}).payoffs(), pd);
  const PayoffMatrix stag{{{6, 6}, {3, 5}}, {{5, 3}, {4, 4}}};
  EXPECT_EQ(hanauske_game({4, 1, 1, 2}).payoffs(), stag);
  const auto flat = hanauske_game({4, 0, 0, 0});
  for (const auto& row : flat.payoffs()) {
    for (const auto& cell : row) EXPECT_EQ(cell, (Payoff{4, 4}));
  }
  EXPECT_EQ(code_of([] { hanauske_game({4, -1, 0, 0}); }), ErrorCode::DomainError);
}

TEST(Hanauske, Regimes) {
  EXPECT_EQ(hanauske_regime({4, 1, 2, 1}), HanauskeRegime::DefectDominant);
  EXPECT_EQ(pure_nash(hanauske_game({4, 1, 2, 1})), (Profiles{{1, 1}}));
  EXPECT_EQ(hanauske_regime({4, 1, 1, 2}), HanauskeRegime::StagHunt);
  EXPECT_EQ(pure_nash(hanauske_game({4, 1, 1, 2})), (Profiles{{0, 0}, {1, 1}}));
  EXPECT_EQ(hanauske_regime({4, 1, 2, 2}), HanauskeRegime::Degenerate);
}

Rational random_rational(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo * 12, hi * 12);
  return Rational(num(rng), 12);
}

TEST(HanauskeProperty, RegimeMatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    HanauskeParams x{random_rational(rng, -5, 5), random_rational(rng, 0, 5), random_rational(rng, 0, 5),
                     random_rational(rng, 0, 5)};
    if (i % 10 == 0) x.delta = x.beta;
    if (x.alpha == 0) x.alpha = Rational(1, 12);
    const auto nash = oracle::pure_nash(hanauske_game(x));
    const bool closed_closed = std::find(nash.begin(), nash.end(), StrategyProfile{1, 1}) != nash.end();
    const bool open_open = std::find(nash.begin(), nash.end(), StrategyProfile{0, 0}) != nash.end();
    EXPECT_TRUE(closed_closed);
    EXPECT_EQ(open_open, x.delta >= x.beta);
    switch (hanauske_regime(x)) {
      case HanauskeRegime::DefectDominant: EXPECT_EQ(nash, (Profiles{{1, 1}})); break;
      case HanauskeRegime::StagHunt: EXPECT_EQ(nash, (Profiles{{0, 0}, {1, 1}})); break;
      case HanauskeRegime::Degenerate: EXPECT_EQ(x.beta, x.delta); break;
    }
  }
}

TEST(Habermann, GameValues) {
  const PayoffMatrix expected{{{9, 7}, {11, 0}}, {{11, 5}, {7, 11}}};
  EXPECT_EQ(habermann_game(habermann_default_params()).payoffs(), expected);
  auto x = habermann_default_params();
  x.L = 0;
  EXPECT_EQ(code_of([&] { habermann_game(x); }), ErrorCode::DomainError);
}

TEST(Besancenot, Utility) {
  const auto x = besancenot_default_params();
  EXPECT_EQ(besancenot_utility(x, AuthorType::H, AuthorStrategy::A), Rational(7, 2));
  auto free = x;
  free.c = 0;
  EXPECT_EQ(besancenot_utility(free, AuthorType::L, AuthorStrategy::T), besancenot_utility(x, AuthorType::L, AuthorStrategy::T));
  auto no_weight = x;
  no_weight.lambda_w = 0;
  auto other_beliefs = no_weight;
  other_beliefs.belief_a = 7;
  other_beliefs.belief_t = Rational(1, 3);
  for (auto t : {AuthorType::H, AuthorType::L}) {
    for (auto s : {AuthorStrategy::A, AuthorStrategy::T}) {
      EXPECT_EQ(besancenot_utility(no_weight, t, s), besancenot_utility(other_beliefs, t, s));
    }
  }
}

TEST(Besancenot, Revenues) {
  auto x = besancenot_default_params();
  x.c = Rational(7, 2);
  EXPECT_EQ(besancenot_revenue(x, 2), Rational(7, 2));
  x.c = 2;
  EXPECT_EQ(besancenot_revenue(x, 1), Rational(13, 10));
  EXPECT_EQ(besancenot_revenue(x, 3), Rational(13, 10));
  EXPECT_EQ(besancenot_revenue(x, 5), Rational(1, 2) * 2 + Rational(3, 2) * Rational(13, 10));
  EXPECT_EQ(besancenot_revenue(x, 5, true), Rational(1, 2) * 2 + Rational(1, 2) * Rational(13, 10));
  EXPECT_EQ(code_of([&] { besancenot_revenue(x, 6); }), ErrorCode::DomainError);
}

TEST(Besancenot, RevenuePole) {
  auto x = besancenot_default_params();
  x.c = (x.delta_a - x.delta_t) * x.theta_l;
  EXPECT_EQ(code_of([&] { besancenot_revenue(x, 4); }), ErrorCode::DivisionByZero);
}

TEST(Besancenot, Preferences) {
  EXPECT_EQ(besancenot_preferences(JournalType::Leading), (std::set<int>{1}));
  EXPECT_EQ(besancenot_preferences(JournalType::SpecializedGood), (std::set<int>{1, 2}));
  EXPECT_EQ(besancenot_preferences(JournalType::SecondTier), (std::set<int>{1, 3}));
}

TEST(BesancenotProperty, PoolingOnOaRevenueEqualsCharge) {
  std::mt19937_64 rng(37);
  auto x = besancenot_default_params();
  for (int i = 0; i < 500; ++i) {
    x.c = random_rational(rng, 0, 20);
    EXPECT_EQ(besancenot_revenue(x, 2), x.c);
  }
}

TEST(Besancenot, DomainChecks) {
  auto x = besancenot_default_params();
  x.mu = Rational(1, 2);
  EXPECT_EQ(code_of([&] { besancenot_revenue(x, 1); }), ErrorCode::DomainError);
  x = besancenot_default_params();
  x.belief_a.reset();
  EXPECT_EQ(code_of([&] { besancenot_utility(x, AuthorType::H, AuthorStrategy::A); }), ErrorCode::DomainError);
}

}  // namespace
}  // namespace ordgame
