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

#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "ordgame/error.hpp"

namespace ordgame {

namespace detail {

template <typename Int>
struct wider;
template <>
struct wider<std::int32_t> {
  using type = std::int64_t;
};
template <>
struct wider<std::int64_t> {
  using type = __int128;
};

template <typename Wide>
constexpr Wide abs_value(Wide v) {
  return v < 0 ? -v : v;
}

template <typename Wide>
constexpr Wide gcd_value(Wide a, Wide b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/*
 * Exact rational number in canonical form.
 *
 * Invariants: den_ > 0 and gcd(|num_|, den_) == 1. Intermediate products are
 * computed in a type twice as wide as Int and narrowed after reduction; a
 * result that does not fit raises ErrorCode::Overflow instead of wrapping.
 */
template <typename Int>
class BasicRational {
 public:
  using int_type = Int;
  using wide_type = typename detail::wider<Int>::type;

  constexpr BasicRational() = default;

  template <std::integral J>
  constexpr BasicRational(J value)  // NOLINT(google-explicit-constructor)
      : BasicRational(static_cast<wide_type>(value), wide_type{1}) {}

  template <std::integral J, std::integral K>
  constexpr BasicRational(J num, K den)
      : BasicRational(static_cast<wide_type>(num), static_cast<wide_type>(den)) {}

  constexpr BasicRational(wide_type num, wide_type den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const wide_type g = detail::gcd_value(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    num_ = narrow(num);
    den_ = narrow(den);
  }

  constexpr Int num() const noexcept { return num_; }
  constexpr Int den() const noexcept { return den_; }

  constexpr bool is_integer() const noexcept { return den_ == 1; }
  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "n", "-n", "n/d" (d may be negative; the result is canonical).
  static BasicRational parse(std::string_view text) {
    auto fail = [&]() -> BasicRational {
      throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    const auto slash = text.find('/');
    Int num{};
    Int den{1};
    if (!parse_int(text.substr(0, slash), num)) return fail();
    if (slash != std::string_view::npos) {
      if (!parse_int(text.substr(slash + 1), den)) return fail();
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    }
    return BasicRational(static_cast<wide_type>(num), static_cast<wide_type>(den));
  }

  static bool is_literal(std::string_view text) {
    if (text.empty()) return false;
    const auto slash = text.find('/');
    Int scratch{};
    if (!parse_int(text.substr(0, slash), scratch)) return false;
    return slash == std::string_view::npos || parse_int(text.substr(slash + 1), scratch);
  }

  constexpr BasicRational operator-() const { return BasicRational(-wide_type{num_}, wide_type{den_}); }

  friend constexpr BasicRational operator+(const BasicRational& a, const BasicRational& b) {
    return BasicRational(wide_type{a.num_} * b.den_ + wide_type{b.num_} * a.den_,
                         wide_type{a.den_} * b.den_);
  }
  friend constexpr BasicRational operator-(const BasicRational& a, const BasicRational& b) {
    return BasicRational(wide_type{a.num_} * b.den_ - wide_type{b.num_} * a.den_,
                         wide_type{a.den_} * b.den_);
  }
  friend constexpr BasicRational operator*(const BasicRational& a, const BasicRational& b) {
    return BasicRational(wide_type{a.num_} * b.num_, wide_type{a.den_} * b.den_);
  }
  friend constexpr BasicRational operator/(const BasicRational& a, const BasicRational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::DivisionByZero, "division by zero rational");
    return BasicRational(wide_type{a.num_} * b.den_, wide_type{a.den_} * b.num_);
  }

  constexpr BasicRational& operator+=(const BasicRational& o) { return *this = *this + o; }
  constexpr BasicRational& operator-=(const BasicRational& o) { return *this = *this - o; }
  constexpr BasicRational& operator*=(const BasicRational& o) { return *this = *this * o; }
  constexpr BasicRational& operator/=(const BasicRational& o) { return *this = *this / o; }

  friend constexpr bool operator==(const BasicRational& a, const BasicRational& b) = default;

  friend constexpr std::strong_ordering operator<=>(const BasicRational& a, const BasicRational& b) {
    const wide_type lhs = wide_type{a.num_} * b.den_;
    const wide_type rhs = wide_type{b.num_} * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicRational& r) { return os << r.to_string(); }

 private:
  static constexpr Int narrow(wide_type v) {
    if (v > static_cast<wide_type>(std::numeric_limits<Int>::max()) ||
        v < static_cast<wide_type>(std::numeric_limits<Int>::min())) {
      throw Error(ErrorCode::Overflow, "rational component exceeds integer range");
    }
    return static_cast<Int>(v);
  }

  static bool parse_int(std::string_view s, Int& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
  }

  Int num_{0};
  Int den_{1};
};

using Rational = BasicRational<std::int64_t>;

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace ordgame

template <typename Int>
struct std::hash<ordgame::BasicRational<Int>> {
  std::size_t operator()(const ordgame::BasicRational<Int>& r) const noexcept {
    const std::size_t h = std::hash<Int>{}(r.num());
    return h ^ (std::hash<Int>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
