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


#include "ordgame/dynamics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "ordgame/models.hpp"

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

NormalFormGame canonical_publishing() { return publishing_game_3x3(canonical_publishing_values()); }

TEST(BrDynamics, HabermannCycle) {
  const auto t = br_dynamics(habermann_game(habermann_default_params()), {0, 0}, BrRule::AlternatingRowFirst, 100);
  ASSERT_TRUE(t.is_cycle());
  EXPECT_EQ(std::get<Cycle>(t.terminal).period, 4u);
  EXPECT_EQ(std::get<Cycle>(t.terminal).first_index, 0u);
  EXPECT_EQ(t.path, (Profiles{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}));
}

TEST(BrDynamics, PrisonersDilemmaAbsorbsFromAnyStart) {
  const auto g = hanauske_game({4, 1, 2, 1});
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      for (auto rule : {BrRule::AlternatingRowFirst, BrRule::AlternatingColFirst}) {
        const auto t = br_dynamics(g, {r, c}, rule, 100);
        ASSERT_TRUE(t.is_fixed_point());
        EXPECT_EQ(std::get<FixedPoint>(t.terminal).profile, (StrategyProfile{1, 1}));
      }
    }
  }
}

TEST(BrDynamics, StrictNashStartStaysPut) {
  const auto t = br_dynamics(hanauske_game({4, 1, 2, 1}), {1, 1}, BrRule::AlternatingRowFirst, 2);
  ASSERT_TRUE(t.is_fixed_point());
  EXPECT_EQ(t.path, (Profiles{{1, 1}}));
}

TEST(BrDynamics, TruncatedAndDomainErrors) {
  const auto g = habermann_game(habermann_default_params());
  EXPECT_TRUE(std::holds_alternative<Truncated>(br_dynamics(g, {0, 0}, BrRule::AlternatingRowFirst, 2).terminal));
  EXPECT_EQ(code_of([&] { br_dynamics(g, {0, 0}, BrRule::AlternatingRowFirst, 0); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([&] { br_dynamics(g, {2, 0}, BrRule::AlternatingRowFirst, 5); }), ErrorCode::IndexOutOfBounds);
}

TEST(CycleConditions, Examples) {
  const auto c = habermann_cycle_conditions(habermann_default_params());
  EXPECT_TRUE(c.author_leaves_s1p1 && c.author_returns_s2p2 && c.publisher_leaves_s1p2);
  auto x = habermann_default_params();
  x.tau = 4;
  EXPECT_FALSE(habermann_cycle_conditions(x).author_leaves_s1p1);
  const auto t = br_dynamics(habermann_game(x), {0, 0}, BrRule::AlternatingRowFirst, 100);
  EXPECT_TRUE(t.is_fixed_point());
  x.tau = 3;  // r + L/2 == tau: a tie is not an improvement
  EXPECT_FALSE(habermann_cycle_conditions(x).author_leaves_s1p1);
}

TEST(CycleConditionsProperty, AgreeWithDynamics) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(1, 24);
  int cycles = 0;
  for (int i = 0; i < 1000; ++i) {
    HabermannParams x;
    x.R = Rational(d(rng), 2);
    x.r = x.R * Rational(d(rng), 25);
    x.I = Rational(d(rng), 2);
    x.tau = x.I * Rational(d(rng), 25);
    x.L = Rational(d(rng), 2);
    x.G = Rational(d(rng), 4);
    x.P = Rational(d(rng), 4);
    const auto t = br_dynamics(habermann_game(x), {0, 0}, BrRule::AlternatingRowFirst, 100);
    const bool period4 = t.is_cycle() && std::get<Cycle>(t.terminal).period == 4;
    EXPECT_EQ(habermann_cycle_conditions(x).all(), period4);
    cycles += period4;
  }
  EXPECT_GT(cycles, 100);
  EXPECT_LT(cycles, 1000);
}

double sum(const ShareState& s) {
  double t = 0;
  for (double v : s.shares) t += v;
  return t;
}

TEST(Replicator, CornerIsFixed) {
  const auto tr = replicator_simulate(canonical_publishing(), {{1.0, 0.0, 0.0}}, 0.0, 0.0, 50);
  for (const auto& s : tr.states) EXPECT_EQ(s, (ShareState{{1.0, 0.0, 0.0}}));
  EXPECT_EQ(tr.stats.time_to_threshold, 0u);
  EXPECT_EQ(tr.stats.max_slope, 0.0);
}

TEST(Replicator, CanonicalConvergesToOa) {
  const auto tr = replicator_simulate(canonical_publishing(), {{1.0 / 3, 1.0 / 3, 1.0 / 3}}, 0.0, 0.0, 1000);
  ASSERT_EQ(tr.stats.converged_to, 0u);
  ASSERT_TRUE(tr.stats.time_to_threshold.has_value());
  EXPECT_LT(*tr.stats.time_to_threshold, 1000u);
  double largest = 0.0;
  for (std::size_t t = 1; t < tr.states.size(); ++t) {
    EXPECT_GE(tr.states[t].shares[0], tr.states[t - 1].shares[0]);
    largest = std::max(largest, tr.states[t].shares[0] - tr.states[t - 1].shares[0]);
  }
  EXPECT_GT(tr.stats.max_slope, 0.0);
  EXPECT_EQ(tr.stats.max_slope, largest);
}

TEST(Replicator, StrongHerdingLocksInTheIncumbent) {
  const auto tr = replicator_simulate(canonical_publishing(), {{0.05, 0.9, 0.05}}, 50.0, 0.0, 1000);
  EXPECT_EQ(tr.stats.converged_to, 1u);
}

TEST(Replicator, NonConvergingRunHasNoWinner) {
  auto g = make_game("a", "b", {"x", "y"}, {"x", "y"}, {{{0, 0}, {1, 1}}, {{1, 1}, {0, 0}}});
  const auto tr = replicator_simulate(g, {{0.3, 0.7}}, 0.0, 1.0, 500);
  EXPECT_FALSE(tr.stats.converged_to.has_value());
  EXPECT_FALSE(tr.stats.time_to_threshold.has_value());
  EXPECT_NEAR(tr.states.back().shares[0], 0.5, 1e-6);
}

TEST(Replicator, InputChecks) {
  const auto g = canonical_publishing();
  EXPECT_EQ(code_of([&] { replicator_simulate(g, {{0.5, 0.6, 0.2}}, 0.0, 0.0, 5); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([&] { replicator_simulate(g, {{0.5, 0.5}}, 0.0, 0.0, 5); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([&] { replicator_simulate(g, {{0.2, 0.2, 0.6}}, 0.0, -10.0, 5); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([&] { replicator_simulate(habermann_game(habermann_default_params()).restrict({0}, {0, 1}),
                                              {{1.0}}, 0.0, 0.0, 5); }),
            ErrorCode::ShapeError);
  EXPECT_EQ(code_of([] { convergence_stats({}, 0.4); }), ErrorCode::DomainError);
}

TEST(ReplicatorProperty, SimplexInvariantAndBitwiseRepeatability) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  const auto g = canonical_publishing();
  for (int i = 0; i < 100; ++i) {
    std::vector<double> x{u(rng), u(rng), u(rng)};
    const double t = x[0] + x[1] + x[2];
    for (double& v : x) v /= t;
    const double h = u(rng) * 10;
    const auto a = replicator_simulate(g, {x}, h, 0.0, 300);
    const auto b = replicator_simulate(g, {x}, h, 0.0, 300);
    ASSERT_EQ(a.states.size(), b.states.size());
    for (std::size_t k = 0; k < a.states.size(); ++k) {
      EXPECT_NEAR(sum(a.states[k]), 1.0, 1e-12);
      for (double v : a.states[k].shares) EXPECT_GE(v, 0.0);
      EXPECT_EQ(std::memcmp(a.states[k].shares.data(), b.states[k].shares.data(), 3 * sizeof(double)), 0);
    }
  }
}

TEST(Trajectory, CsvLayout) {
  const auto tr = replicator_simulate(canonical_publishing(), {{0.5, 0.25, 0.25}}, 0.0, 0.0, 2);
  std::ostringstream os;
  write_trajectory(os, tr, {"OA", "C", "H"});
  std::istringstream is(os.str());
  std::string header, first;
  std::getline(is, header);
  std::getline(is, first);
  EXPECT_EQ(header, "step,x_oa,x_c,x_h");
  EXPECT_EQ(first, "0,0.5,0.25,0.25");
  std::size_t lines = 2;
  for (std::string l; std::getline(is, l);) ++lines;
  EXPECT_EQ(lines, 4u);
}

}  // namespace
}  // namespace ordgame
