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
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordgame/error.hpp"
#include "ordgame/game.hpp"
#include "ordgame/models.hpp"

namespace ordgame {

// ---------------------------------------------------------------------------
// Best-response dynamics

enum class BrRule { AlternatingRowFirst, AlternatingColFirst };

struct FixedPoint {
  StrategyProfile profile;
};
struct Cycle {
  std::size_t period = 0;
  std::size_t first_index = 0;
};
struct Truncated {};

using BrTerminal = std::variant<FixedPoint, Cycle, Truncated>;

/// `path` holds the start and every profile reached by a move; turns where
/// the mover already plays a best response add nothing.
struct BrDynamicsTrace {
  std::vector<StrategyProfile> path;
  BrTerminal terminal;

  bool is_cycle() const { return std::holds_alternative<Cycle>(terminal); }
  bool is_fixed_point() const { return std::holds_alternative<FixedPoint>(terminal); }
};

/*
 * Players take turns. The mover stays when its current strategy is a best
 * response and otherwise switches to the lowest-index best response. Two
 * consecutive stays end in FixedPoint; revisiting a (profile, mover) state
 * ends in Cycle.
 */
inline BrDynamicsTrace br_dynamics(const NormalFormGame& game, StrategyProfile start, BrRule rule,
                                   std::size_t max_steps) {
  game.check_index(Player::Row, start.row);
  game.check_index(Player::Col, start.col);
  if (max_steps < 1) throw Error(ErrorCode::DomainError, "max_steps must be >= 1");
  BrDynamicsTrace trace;
  trace.path.push_back(start);
  Player turn = rule == BrRule::AlternatingRowFirst ? Player::Row : Player::Col;
  StrategyProfile cur = start;
  std::map<std::pair<StrategyProfile, int>, std::size_t> seen;  // state -> path index
  seen[{cur, static_cast<int>(turn)}] = 0;
  int stays = 0;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const std::size_t own = turn == Player::Row ? cur.row : cur.col;
    const std::size_t opp = turn == Player::Row ? cur.col : cur.row;
    if (is_best_response(game, turn, own, opp)) {
      ++stays;
    } else {
      stays = 0;
      const std::size_t next = best_responses(game, turn, opp).front();
      (turn == Player::Row ? cur.row : cur.col) = next;
      trace.path.push_back(cur);
    }
    turn = opponent(turn);
    if (stays >= 2) {
      trace.terminal = FixedPoint{cur};
      return trace;
    }
    auto [it, inserted] = seen.emplace(std::make_pair(cur, static_cast<int>(turn)), trace.path.size() - 1);
    if (!inserted) {
      trace.terminal = Cycle{trace.path.size() - 1 - it->second, it->second};
      return trace;
    }
  }
  trace.terminal = Truncated{};
  return trace;
}

struct HabermannCycleConditions {
  bool author_leaves_s1p1 = false;    // r + L/2 > tau
  bool author_returns_s2p2 = false;   // G + P + tau > r + L
  bool publisher_leaves_s1p2 = false; // G + I - L/2 > 0

  bool all() const { return author_leaves_s1p1 && author_returns_s2p2 && publisher_leaves_s1p2; }
};

/// Strict-improvement conditions for the four-move oscillation; the
/// publisher's move at (s2,p1) holds whenever P + L > 0.
inline HabermannCycleConditions habermann_cycle_conditions(const HabermannParams& x) {
  x.validate();
  return {x.r + x.L / 2 > x.tau, x.G + x.P + x.tau > x.r + x.L, x.G + x.I - x.L / 2 > 0};
}

// ---------------------------------------------------------------------------
// Replicator dynamics with herding

inline constexpr double kSimplexTolerance = 1e-12;

struct ShareState {
  std::vector<double> shares;

  friend bool operator==(const ShareState&, const ShareState&) = default;
};

struct ConvergenceStats {
  std::optional<std::size_t> converged_to;
  std::optional<std::size_t> time_to_threshold;
  double max_slope = 0.0;
};

struct ShareTrajectory {
  std::vector<ShareState> states;
  ConvergenceStats stats;
};

/// Winner is the model with the largest final share; it has converged once
/// its share reaches `threshold`.
inline ConvergenceStats convergence_stats(const std::vector<ShareState>& states, double threshold = 0.99) {
  if (!(threshold > 0.5 && threshold <= 1.0)) throw Error(ErrorCode::DomainError, "threshold must lie in (0.5, 1]");
  ConvergenceStats st;
  if (states.empty()) return st;
  const auto& last = states.back().shares;
  const auto win = static_cast<std::size_t>(std::max_element(last.begin(), last.end()) - last.begin());
  for (std::size_t t = 0; t < states.size(); ++t) {
    if (states[t].shares[win] >= threshold) {
      st.converged_to = win;
      st.time_to_threshold = t;
      break;
    }
  }
  if (!st.converged_to) st.time_to_threshold.reset();
  for (std::size_t t = 1; t < states.size(); ++t) {
    st.max_slope = std::max(st.max_slope, states[t].shares[win] - states[t - 1].shares[win]);
  }
  return st;
}

namespace detail {

inline void check_simplex(const std::vector<double>& x, std::size_t n) {
  if (x.size() != n) {
    throw Error(ErrorCode::DomainError, "share vector has " + std::to_string(x.size()) + " entries, expected " +
                                            std::to_string(n));
  }
  double sum = 0.0;
  for (double v : x) {
    if (!std::isfinite(v) || v < 0.0) throw Error(ErrorCode::DomainError, "shares must be finite and >= 0");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error(ErrorCode::DomainError, "initial shares do not sum to 1");
}

}  // namespace detail

/*
 * Row-player population over the game's strategies. Fitness of model i is
 * its expected row payoff against the current mix; adjusted fitness is
 * g_i = f_i + sigma + h * x_i and x_i' = x_i * g_i / sum_j x_j * g_j,
 * renormalized each step.
 */
inline ShareTrajectory replicator_simulate(const NormalFormGame& game, const ShareState& init, double herd_weight,
                                           double payoff_shift, std::size_t steps, double threshold = 0.99) {
  if (game.rows() != game.cols()) throw Error(ErrorCode::ShapeError, "replicator needs a square game");
  if (!(herd_weight >= 0.0)) throw Error(ErrorCode::DomainError, "herd weight must be >= 0");
  const std::size_t n = game.rows();
  detail::check_simplex(init.shares, n);
  std::vector<std::vector<double>> u(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) u[i][j] = game.payoff(i, j).row.to_double();
  }
  ShareTrajectory tr;
  std::vector<double> x = init.shares;
  double total = 0.0;
  for (double v : x) total += v;
  for (double& v : x) v /= total;
  tr.states.push_back({x});
  std::vector<double> g(n);
  for (std::size_t t = 0; t < steps; ++t) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double f = 0.0;
      for (std::size_t j = 0; j < n; ++j) f += u[i][j] * x[j];
      g[i] = f + payoff_shift + herd_weight * x[i];
      if (!(g[i] > 0.0)) {
        throw Error(ErrorCode::DomainError, "adjusted fitness of strategy " + game.strategy_label(Player::Row, i) +
                                                " is not positive; increase the payoff shift");
      }
      mean += x[i] * g[i];
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += (x[i] = x[i] * g[i] / mean);
    for (double& v : x) v /= sum;
    tr.states.push_back({x});
  }
  tr.stats = convergence_stats(tr.states, threshold);
  return tr;
}

/// `step,x_<label>...` with values at 12 significant digits.
inline void write_trajectory(std::ostream& os, const ShareTrajectory& tr, const std::vector<std::string>& labels) {
  os << "step";
  for (const auto& l : labels) {
    std::string lower = l;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    os << ",x_" << lower;
  }
  os << "\n";
  char buf[32];
  for (std::size_t t = 0; t < tr.states.size(); ++t) {
    os << t;
    for (double v : tr.states[t].shares) {
      std::snprintf(buf, sizeof buf, "%.12g", v);
      os << "," << buf;
    }
    os << "\n";
  }
}

}  // namespace ordgame
