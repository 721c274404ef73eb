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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ordgame/rational.hpp"

namespace ordgame::linalg {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

/// Solves the square system a·x = b exactly. nullopt when a is singular.
inline std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline std::size_t rank(Matrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t k = r + 1; k < rows; ++k) {
      if (a[k][c].is_zero()) continue;
      const Rational f = a[k][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[k][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace ordgame::linalg
