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
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordgame/error.hpp"
#include "ordgame/game.hpp"
#include "ordgame/linalg.hpp"
#include "ordgame/rational.hpp"

namespace ordgame {

struct MixedProfile {
  std::vector<Rational> row;
  std::vector<Rational> col;

  const std::vector<Rational>& of(Player p) const noexcept { return p == Player::Row ? row : col; }

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
  friend auto operator<=>(const MixedProfile&, const MixedProfile&) = default;
};

enum class EquilibriumKind { PureCorner, InteriorMixed, ComponentDegenerate };

constexpr const char* to_string(EquilibriumKind k) {
  switch (k) {
    case EquilibriumKind::PureCorner: return "PureCorner";
    case EquilibriumKind::InteriorMixed: return "InteriorMixed";
    case EquilibriumKind::ComponentDegenerate: return "ComponentDegenerate";
  }
  return "?";
}

struct EquilibriumResult {
  EquilibriumKind kind = EquilibriumKind::PureCorner;
  MixedProfile profile;
  std::vector<std::size_t> row_support;
  std::vector<std::size_t> col_support;
  std::optional<std::string> degeneracy_note;

  friend bool operator==(const EquilibriumResult&, const EquilibriumResult&) = default;
};

inline MixedProfile pure_profile(const NormalFormGame& game, StrategyProfile s) {
  MixedProfile m{std::vector<Rational>(game.rows()), std::vector<Rational>(game.cols())};
  m.row[s.row] = 1;
  m.col[s.col] = 1;
  return m;
}

inline void check_distribution(const std::vector<Rational>& d, std::size_t expected_size) {
  if (d.size() != expected_size) {
    throw Error(ErrorCode::DimensionMismatch, "distribution has " + std::to_string(d.size()) +
                                                  " entries, expected " + std::to_string(expected_size));
  }
  Rational sum;
  for (const auto& p : d) {
    if (p < 0 || p > 1) throw Error(ErrorCode::DomainError, "probability " + p.to_string() + " outside [0,1]");
    sum += p;
  }
  if (sum != 1) throw Error(ErrorCode::DomainError, "probabilities sum to " + sum.to_string());
}

/// Expected payoff to `who` playing pure strategy `own` against `opp_mix`.
inline Rational expected_payoff(const NormalFormGame& game, Player who, std::size_t own,
                                const std::vector<Rational>& opp_mix) {
  Rational v;
  for (std::size_t o = 0; o < opp_mix.size(); ++o) {
    if (!opp_mix[o].is_zero()) v += opp_mix[o] * game.payoff_of(who, own, o);
  }
  return v;
}

inline Rational expected_value(const NormalFormGame& game, Player who, const MixedProfile& m) {
  Rational v;
  const auto& own = m.of(who);
  for (std::size_t s = 0; s < own.size(); ++s) {
    if (!own[s].is_zero()) v += own[s] * expected_payoff(game, who, s, m.of(opponent(who)));
  }
  return v;
}

inline std::vector<std::size_t> mixed_best_responses(const NormalFormGame& game, Player who,
                                                     const std::vector<Rational>& opp_mix) {
  std::vector<std::size_t> best;
  std::optional<Rational> top;
  for (std::size_t s = 0; s < game.num_strategies(who); ++s) {
    const Rational v = expected_payoff(game, who, s, opp_mix);
    if (!top || v > *top) {
      top = v;
      best.assign(1, s);
    } else if (v == *top) {
      best.push_back(s);
    }
  }
  return best;
}

inline std::vector<std::size_t> support_of(const std::vector<Rational>& d) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > 0) s.push_back(i);
  }
  return s;
}

/// Nash condition: every strategy played with positive probability is a
/// best response to the opponent's mixture.
inline bool is_mixed_nash(const NormalFormGame& game, const MixedProfile& m) {
  check_distribution(m.row, game.rows());
  check_distribution(m.col, game.cols());
  for (Player p : {Player::Row, Player::Col}) {
    const auto br = mixed_best_responses(game, p, m.of(opponent(p)));
    for (auto s : support_of(m.of(p))) {
      if (!std::binary_search(br.begin(), br.end(), s)) return false;
    }
  }
  return true;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Square indifference system for the mixture of `owner` over `own_support`
// that equalizes the opponent's payoffs over `opp_support`:
//   sum_s payoff_opp(o, s) w_s - u = 0   for o in opp_support
//   sum_s w_s = 1
// Unknowns are (w_s for s in own_support, u). Requires equal support sizes.
inline linalg::Matrix indifference_matrix(const NormalFormGame& game, Player owner,
                                          const std::vector<std::size_t>& own_support,
                                          const std::vector<std::size_t>& opp_support) {
  const std::size_t k = own_support.size();
  linalg::Matrix a;
  for (auto o : opp_support) {
    std::vector<Rational> line;
    for (auto s : own_support) line.push_back(game.payoff_of(opponent(owner), o, s));
    line.push_back(-1);
    a.push_back(std::move(line));
  }
  std::vector<Rational> sum(k, Rational(1));
  sum.push_back(0);
  a.push_back(std::move(sum));
  return a;
}

inline std::optional<std::vector<Rational>> solve_indifference(
    const NormalFormGame& game, Player owner, const std::vector<std::size_t>& own_support,
    const std::vector<std::size_t>& opp_support) {
  auto a = indifference_matrix(game, owner, own_support, opp_support);
  linalg::Vector b(a.size(), Rational(0));
  b.back() = 1;
  auto sol = linalg::solve(std::move(a), std::move(b));
  if (!sol) return std::nullopt;
  std::vector<Rational> w(game.num_strategies(owner));
  for (std::size_t i = 0; i < own_support.size(); ++i) w[own_support[i]] = (*sol)[i];
  return w;
}

inline bool profile_greater(const EquilibriumResult& a, const EquilibriumResult& b) {
  return a.profile > b.profile;
}

inline void sort_and_dedupe(std::vector<EquilibriumResult>& v) {
  std::sort(v.begin(), v.end(), profile_greater);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.profile == b.profile; }),
          v.end());
}

// Vertices of the best-response polytope of `owner`:
//   { (w, u) : w >= 0, sum w = 1, sum_s payoff_opp(o, s) w_s <= u for all o }.
// These are the candidate extreme-equilibrium strategies of `owner`.
inline std::vector<std::vector<Rational>> polytope_vertices(const NormalFormGame& game, Player owner) {
  const std::size_t k = game.num_strategies(owner);
  const std::size_t l = game.num_strategies(opponent(owner));
  std::vector<std::vector<Rational>> out;
  for (const auto& tight : combinations(k + l, k)) {
    linalg::Matrix a;
    linalg::Vector b;
    for (auto t : tight) {
      std::vector<Rational> line(k + 1);
      if (t < k) {
        line[t] = 1;
      } else {
        for (std::size_t s = 0; s < k; ++s) line[s] = game.payoff_of(opponent(owner), t - k, s);
        line[k] = -1;
      }
      a.push_back(std::move(line));
      b.push_back(0);
    }
    std::vector<Rational> sum(k, Rational(1));
    sum.push_back(0);
    a.push_back(std::move(sum));
    b.push_back(1);
    auto sol = linalg::solve(std::move(a), std::move(b));
    if (!sol) continue;
    std::vector<Rational> w(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k));
    const Rational& u = (*sol)[k];
    bool feasible = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x >= 0; });
    for (std::size_t o = 0; feasible && o < l; ++o) {
      Rational v;
      for (std::size_t s = 0; s < k; ++s) v += game.payoff_of(opponent(owner), o, s) * w[s];
      if (v > u) feasible = false;
    }
    if (feasible && std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace detail

/// Labels a verified equilibrium. PureCorner iff both supports are singletons;
/// a mixed point is ComponentDegenerate when some player has more pure best
/// responses than support strategies, the supports differ in size, or the
/// indifference system on the supports is singular.
inline EquilibriumResult classify(const NormalFormGame& game, const MixedProfile& m) {
  EquilibriumResult r;
  r.profile = m;
  r.row_support = support_of(m.row);
  r.col_support = support_of(m.col);
  const auto br_row = mixed_best_responses(game, Player::Row, m.col);
  const auto br_col = mixed_best_responses(game, Player::Col, m.row);
  const bool extra_br = br_row.size() > r.row_support.size() || br_col.size() > r.col_support.size();
  if (r.row_support.size() == 1 && r.col_support.size() == 1) {
    r.kind = EquilibriumKind::PureCorner;
    if (extra_br) r.degeneracy_note = "pure equilibrium with tied best responses";
    return r;
  }
  if (extra_br) {
    r.kind = EquilibriumKind::ComponentDegenerate;
    r.degeneracy_note = "more pure best responses than support strategies";
    return r;
  }
  if (r.row_support.size() != r.col_support.size()) {
    r.kind = EquilibriumKind::ComponentDegenerate;
    r.degeneracy_note = "supports of unequal size";
    return r;
  }
  const std::size_t k = r.row_support.size();
  if (linalg::rank(detail::indifference_matrix(game, Player::Row, r.row_support, r.col_support)) < k + 1 ||
      linalg::rank(detail::indifference_matrix(game, Player::Col, r.col_support, r.row_support)) < k + 1) {
    r.kind = EquilibriumKind::ComponentDegenerate;
    r.degeneracy_note = "singular indifference system";
    return r;
  }
  r.kind = EquilibriumKind::InteriorMixed;
  return r;
}

struct Thresholds {
  std::optional<Rational> q_star;  // column mixture making the row player indifferent
  std::optional<Rational> p_star;  // row mixture making the column player indifferent
};

inline void require_2x2(const NormalFormGame& game) {
  if (game.rows() != 2 || game.cols() != 2) {
    throw Error(ErrorCode::ShapeError, "expected a 2x2 game, got " + std::to_string(game.rows()) + "x" +
                                           std::to_string(game.cols()));
  }
}

namespace detail {

// Solves d0*t + d1*(1-t) = 0 for t in [0,1]; nullopt when no unique solution lies there.
inline std::optional<Rational> equalizer(const Rational& d0, const Rational& d1) {
  const Rational den = d0 - d1;
  if (den.is_zero()) return std::nullopt;
  const Rational t = -d1 / den;
  if (t < 0 || t > 1) return std::nullopt;
  return t;
}

}  // namespace detail

/// Probabilities on the first strategy that leave the opponent indifferent.
/// nullopt stands for "none due to dominance": no mixture in [0,1] equalizes
/// the two strategies, or every mixture does.
inline Thresholds indifference_thresholds(const NormalFormGame& game) {
  require_2x2(game);
  const auto& a = game.payoffs();
  Thresholds t;
  // Row: q*A00 + (1-q)*A01 = q*A10 + (1-q)*A11.
  t.q_star = detail::equalizer(a[0][0].row - a[1][0].row, a[0][1].row - a[1][1].row);
  // Col: p*B00 + (1-p)*B10 = p*B01 + (1-p)*B11.
  t.p_star = detail::equalizer(a[0][0].col - a[0][1].col, a[1][0].col - a[1][1].col);
  return t;
}

/// Closed-form 2x2 analysis. Extreme equilibria have p in {1, 0, p*} and
/// q in {1, 0, q*}; each candidate is kept iff it satisfies the Nash condition.
/// Sorted by (p, q) descending.
inline std::vector<EquilibriumResult> mixed_2x2(const NormalFormGame& game) {
  require_2x2(game);
  const Thresholds t = indifference_thresholds(game);
  std::vector<Rational> ps{1, 0};
  std::vector<Rational> qs{1, 0};
  if (t.p_star) ps.push_back(*t.p_star);
  if (t.q_star) qs.push_back(*t.q_star);
  std::vector<EquilibriumResult> out;
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      MixedProfile m{{p, 1 - p}, {q, 1 - q}};
      if (is_mixed_nash(game, m)) out.push_back(classify(game, m));
    }
  }
  detail::sort_and_dedupe(out);
  return out;
}

/// Equilibria of a game up to 4x4. Equal-size support pairs are solved
/// exactly first; extreme equilibria of degenerate games (which equal-size
/// supports can miss) are then completed from the vertices of both players'
/// best-response polytopes. Output is deduplicated, sorted descending.
inline std::vector<EquilibriumResult> support_enumeration(const NormalFormGame& game) {
  if (game.rows() > 4 || game.cols() > 4) {
    throw Error(ErrorCode::ShapeError, "support enumeration is limited to 4x4 games");
  }
  std::vector<EquilibriumResult> out;
  const std::size_t kmax = std::min(game.rows(), game.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    for (const auto& rs : detail::combinations(game.rows(), k)) {
      for (const auto& cs : detail::combinations(game.cols(), k)) {
        auto x = detail::solve_indifference(game, Player::Row, rs, cs);
        auto y = detail::solve_indifference(game, Player::Col, cs, rs);
        if (!x || !y) continue;
        const auto nonneg = [](const std::vector<Rational>& w) {
          return std::all_of(w.begin(), w.end(), [](const Rational& v) { return v >= 0; });
        };
        if (!nonneg(*x) || !nonneg(*y)) continue;
        MixedProfile m{std::move(*x), std::move(*y)};
        if (is_mixed_nash(game, m)) out.push_back(classify(game, m));
      }
    }
  }
  const auto xs = detail::polytope_vertices(game, Player::Row);
  const auto ys = detail::polytope_vertices(game, Player::Col);
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      MixedProfile m{x, y};
      if (is_mixed_nash(game, m)) out.push_back(classify(game, m));
    }
  }
  detail::sort_and_dedupe(out);
  return out;
}

}  // namespace ordgame
