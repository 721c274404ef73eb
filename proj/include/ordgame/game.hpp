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
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordgame/error.hpp"
#include "ordgame/rational.hpp"

namespace ordgame {

enum class Player { Row, Col };

constexpr Player opponent(Player p) { return p == Player::Row ? Player::Col : Player::Row; }

constexpr const char* to_string(Player p) { return p == Player::Row ? "Row" : "Col"; }

struct Payoff {
  Rational row;
  Rational col;

  friend bool operator==(const Payoff&, const Payoff&) = default;
};

struct StrategyProfile {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;
};

using PayoffMatrix = std::vector<std::vector<Payoff>>;

/// Finite two-player game in strategic form with exact payoffs.
class NormalFormGame {
 public:
  static NormalFormGame make(std::string row_label, std::string col_label,
                             std::vector<std::string> row_strategies,
                             std::vector<std::string> col_strategies, PayoffMatrix payoffs) {
    if (row_strategies.empty() || col_strategies.empty()) {
      throw Error(ErrorCode::DimensionMismatch, "each player needs at least one strategy");
    }
    if (payoffs.size() != row_strategies.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "payoff matrix has " + std::to_string(payoffs.size()) + " rows, expected " +
                      std::to_string(row_strategies.size()));
    }
    for (std::size_t r = 0; r < payoffs.size(); ++r) {
      if (payoffs[r].size() != col_strategies.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "payoff row " + std::to_string(r) + " has " + std::to_string(payoffs[r].size()) +
                        " cells, expected " + std::to_string(col_strategies.size()));
      }
    }
    check_unique(row_strategies, row_label);
    check_unique(col_strategies, col_label);
    NormalFormGame g;
    g.row_label_ = std::move(row_label);
    g.col_label_ = std::move(col_label);
    g.row_strategies_ = std::move(row_strategies);
    g.col_strategies_ = std::move(col_strategies);
    g.payoffs_ = std::move(payoffs);
    return g;
  }

  const std::string& row_label() const noexcept { return row_label_; }
  const std::string& col_label() const noexcept { return col_label_; }
  const std::string& player_label(Player p) const noexcept {
    return p == Player::Row ? row_label_ : col_label_;
  }

  std::size_t rows() const noexcept { return row_strategies_.size(); }
  std::size_t cols() const noexcept { return col_strategies_.size(); }
  std::size_t num_strategies(Player p) const noexcept { return p == Player::Row ? rows() : cols(); }

  const std::vector<std::string>& strategies(Player p) const noexcept {
    return p == Player::Row ? row_strategies_ : col_strategies_;
  }
  const std::string& strategy_label(Player p, std::size_t i) const {
    check_index(p, i);
    return strategies(p)[i];
  }
  std::optional<std::size_t> index_of(Player p, const std::string& label) const {
    const auto& s = strategies(p);
    auto it = std::find(s.begin(), s.end(), label);
    if (it == s.end()) return std::nullopt;
    return static_cast<std::size_t>(it - s.begin());
  }

  const PayoffMatrix& payoffs() const noexcept { return payoffs_; }

  const Payoff& payoff(std::size_t r, std::size_t c) const {
    check_index(Player::Row, r);
    check_index(Player::Col, c);
    return payoffs_[r][c];
  }
  const Payoff& payoff(StrategyProfile s) const { return payoff(s.row, s.col); }

  /// Payoff to `who` when it plays `own` and the opponent plays `opp`.
  const Rational& payoff_of(Player who, std::size_t own, std::size_t opp) const {
    return who == Player::Row ? payoff(own, opp).row : payoff(opp, own).col;
  }

  void check_index(Player p, std::size_t i) const {
    if (i >= num_strategies(p)) {
      throw Error(ErrorCode::IndexOutOfBounds, std::string(to_string(p)) + " strategy index " +
                                                   std::to_string(i) + " out of range");
    }
  }

  std::string profile_label(StrategyProfile s) const {
    return "(" + strategy_label(Player::Row, s.row) + "," + strategy_label(Player::Col, s.col) + ")";
  }

  /// Sub-game keeping the given strategy indices (in the given order).
  NormalFormGame restrict(const std::vector<std::size_t>& keep_rows,
                          const std::vector<std::size_t>& keep_cols) const {
    std::vector<std::string> rs;
    std::vector<std::string> cs;
    PayoffMatrix m;
    for (auto r : keep_rows) rs.push_back(strategy_label(Player::Row, r));
    for (auto c : keep_cols) cs.push_back(strategy_label(Player::Col, c));
    for (auto r : keep_rows) {
      std::vector<Payoff> line;
      for (auto c : keep_cols) line.push_back(payoff(r, c));
      m.push_back(std::move(line));
    }
    return make(row_label_, col_label_, std::move(rs), std::move(cs), std::move(m));
  }

  friend bool operator==(const NormalFormGame&, const NormalFormGame&) = default;

 private:
  NormalFormGame() = default;

  static void check_unique(const std::vector<std::string>& labels, const std::string& who) {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) {
        throw Error(ErrorCode::DuplicateLabel, "duplicate strategy '" + l + "' for " + who);
      }
    }
  }

  std::string row_label_;
  std::string col_label_;
  std::vector<std::string> row_strategies_;
  std::vector<std::string> col_strategies_;
  PayoffMatrix payoffs_;
};

inline NormalFormGame make_game(std::string row_label, std::string col_label,
                                std::vector<std::string> row_strategies,
                                std::vector<std::string> col_strategies, PayoffMatrix payoffs) {
  return NormalFormGame::make(std::move(row_label), std::move(col_label), std::move(row_strategies),
                              std::move(col_strategies), std::move(payoffs));
}

// ---------------------------------------------------------------------------
// Best responses and pure equilibria

/// Argmax set of `player`'s payoff against a fixed opposing strategy, ascending.
inline std::vector<std::size_t> best_responses(const NormalFormGame& game, Player player,
                                               std::size_t opposing) {
  game.check_index(opponent(player), opposing);
  std::vector<std::size_t> best;
  std::optional<Rational> top;
  for (std::size_t s = 0; s < game.num_strategies(player); ++s) {
    const Rational& v = game.payoff_of(player, s, opposing);
    if (!top || v > *top) {
      top = v;
      best.assign(1, s);
    } else if (v == *top) {
      best.push_back(s);
    }
  }
  return best;
}

inline bool is_best_response(const NormalFormGame& game, Player player, std::size_t own,
                             std::size_t opposing) {
  const auto br = best_responses(game, player, opposing);
  return std::binary_search(br.begin(), br.end(), own);
}

inline bool is_pure_nash(const NormalFormGame& game, StrategyProfile s) {
  return is_best_response(game, Player::Row, s.row, s.col) &&
         is_best_response(game, Player::Col, s.col, s.row);
}

/// Mutual best-response profiles, sorted lexicographically.
inline std::vector<StrategyProfile> pure_nash(const NormalFormGame& game) {
  std::vector<StrategyProfile> out;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      if (is_pure_nash(game, {r, c})) out.push_back({r, c});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dominance

enum class DominanceKind { Strict, Weak };

enum class DominanceStatus { StrictlyDominated, WeaklyDominated, NotDominated };

constexpr const char* to_string(DominanceKind k) { return k == DominanceKind::Strict ? "Strict" : "Weak"; }

constexpr const char* to_string(DominanceStatus s) {
  switch (s) {
    case DominanceStatus::StrictlyDominated: return "StrictlyDominated";
    case DominanceStatus::WeaklyDominated: return "WeaklyDominated";
    case DominanceStatus::NotDominated: return "NotDominated";
  }
  return "?";
}

struct DominanceVerdict {
  DominanceStatus kind = DominanceStatus::NotDominated;
  std::optional<std::size_t> dominator;

  friend bool operator==(const DominanceVerdict&, const DominanceVerdict&) = default;
};

namespace detail {

inline std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Compares `a` against `b` for `player` over the given opposing strategies.
// Returns {a >= b everywhere, a > b everywhere, a > b somewhere}.
struct Comparison {
  bool all_ge = true;
  bool all_gt = true;
  bool any_gt = false;
};

inline Comparison compare_strategies(const NormalFormGame& game, Player player, std::size_t a,
                                     std::size_t b, const std::vector<std::size_t>& opposing) {
  Comparison c;
  for (auto o : opposing) {
    const Rational& va = game.payoff_of(player, a, o);
    const Rational& vb = game.payoff_of(player, b, o);
    if (va < vb) c.all_ge = false;
    if (!(va > vb)) c.all_gt = false;
    if (va > vb) c.any_gt = true;
  }
  return c;
}

inline bool dominates_over(const NormalFormGame& game, Player player, std::size_t a, std::size_t b,
                           DominanceKind kind, const std::vector<std::size_t>& opposing) {
  if (a == b) return false;
  const auto c = compare_strategies(game, player, a, b, opposing);
  return kind == DominanceKind::Strict ? c.all_gt : (c.all_ge && c.any_gt);
}

// Verdict for `s` among `alive` own strategies against `opposing`; the
// dominator is the lowest-index strategy that dominates under `kind`.
inline DominanceVerdict verdict_over(const NormalFormGame& game, Player player, std::size_t s,
                                     DominanceKind kind, const std::vector<std::size_t>& alive,
                                     const std::vector<std::size_t>& opposing) {
  for (auto d : alive) {
    if (d == s || !dominates_over(game, player, d, s, kind, opposing)) continue;
    const bool strict = compare_strategies(game, player, d, s, opposing).all_gt;
    return {strict ? DominanceStatus::StrictlyDominated : DominanceStatus::WeaklyDominated, d};
  }
  return {};
}

}  // namespace detail

/// True when strategy `a` dominates strategy `b` of `player` in the full game.
inline bool dominates(const NormalFormGame& game, Player player, std::size_t a, std::size_t b,
                      DominanceKind kind) {
  game.check_index(player, a);
  game.check_index(player, b);
  return detail::dominates_over(game, player, a, b, kind,
                                detail::iota_indices(game.num_strategies(opponent(player))));
}

/// One verdict per strategy of `player`. The verdict names the lowest-index
/// dominator; its kind reports whether that dominator wins strictly.
inline std::vector<DominanceVerdict> dominated_strategies(const NormalFormGame& game, Player player,
                                                          DominanceKind kind) {
  const auto own = detail::iota_indices(game.num_strategies(player));
  const auto opp = detail::iota_indices(game.num_strategies(opponent(player)));
  std::vector<DominanceVerdict> out;
  out.reserve(own.size());
  for (auto s : own) out.push_back(detail::verdict_over(game, player, s, kind, own, opp));
  return out;
}

// ---------------------------------------------------------------------------
// Iterated elimination of dominated strategies

enum class PlayerOrder { RowFirst, ColFirst, Alternating };

constexpr const char* to_string(PlayerOrder o) {
  switch (o) {
    case PlayerOrder::RowFirst: return "RowFirst";
    case PlayerOrder::ColFirst: return "ColFirst";
    case PlayerOrder::Alternating: return "Alternating";
  }
  return "?";
}

/// RowFirst/ColFirst give that player priority at every step; Alternating
/// hands the turn to the other player after each elimination. Exactly one
/// strategy (the lowest-index dominated one) is removed per step.
struct IedsPolicy {
  DominanceKind kind = DominanceKind::Weak;
  PlayerOrder order = PlayerOrder::RowFirst;

  friend bool operator==(const IedsPolicy&, const IedsPolicy&) = default;
};

struct EliminationStep {
  std::size_t round = 0;
  Player player = Player::Row;
  std::string removed;
  std::string dominator;
  DominanceKind kind = DominanceKind::Weak;

  friend bool operator==(const EliminationStep&, const EliminationStep&) = default;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
  NormalFormGame terminal_game;

  const NormalFormGame& reduced() const noexcept { return terminal_game; }
};

inline EliminationTrace ieds(const NormalFormGame& game, const IedsPolicy& policy) {
  std::vector<std::size_t> alive_rows = detail::iota_indices(game.rows());
  std::vector<std::size_t> alive_cols = detail::iota_indices(game.cols());
  auto alive = [&](Player p) -> std::vector<std::size_t>& {
    return p == Player::Row ? alive_rows : alive_cols;
  };

  std::vector<EliminationStep> steps;
  Player turn = policy.order == PlayerOrder::ColFirst ? Player::Col : Player::Row;
  for (;;) {
    bool removed_any = false;
    const Player first = policy.order == PlayerOrder::Alternating ? turn : (policy.order == PlayerOrder::ColFirst ? Player::Col : Player::Row);
    for (Player p : {first, opponent(first)}) {
      auto& own = alive(p);
      const auto& opp = alive(opponent(p));
      for (std::size_t k = 0; k < own.size(); ++k) {
        const auto v = detail::verdict_over(game, p, own[k], policy.kind, own, opp);
        if (v.kind == DominanceStatus::NotDominated) continue;
        steps.push_back({steps.size() + 1, p, game.strategy_label(p, own[k]),
                         game.strategy_label(p, *v.dominator),
                         v.kind == DominanceStatus::StrictlyDominated ? DominanceKind::Strict
                                                                      : DominanceKind::Weak});
        own.erase(own.begin() + static_cast<std::ptrdiff_t>(k));
        removed_any = true;
        turn = opponent(p);
        break;
      }
      if (removed_any) break;
    }
    if (!removed_any) break;
  }
  return {std::move(steps), game.restrict(alive_rows, alive_cols)};
}

// ---------------------------------------------------------------------------
// Pareto status

struct ParetoStatus {
  std::vector<StrategyProfile> dominated_by;  // empty means Pareto optimal

  bool optimal() const noexcept { return dominated_by.empty(); }
  friend bool operator==(const ParetoStatus&, const ParetoStatus&) = default;
};

inline bool pareto_dominates(const Payoff& a, const Payoff& b) {
  return a.row >= b.row && a.col >= b.col && (a.row > b.row || a.col > b.col);
}

inline ParetoStatus pareto_status(const NormalFormGame& game, StrategyProfile s) {
  const Payoff& base = game.payoff(s);
  ParetoStatus out;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      if (pareto_dominates(game.payoff(r, c), base)) out.dominated_by.push_back({r, c});
    }
  }
  return out;
}

}  // namespace ordgame
