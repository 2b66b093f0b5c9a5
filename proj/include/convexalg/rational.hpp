/*
 * Copyright 2026 The convexalg authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "convexalg/errors.hpp"

namespace convexalg {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t narrow128(int128 v) {
  if (v > int128(std::numeric_limits<std::int64_t>::max()) ||
      v < int128(std::numeric_limits<std::int64_t>::min())) {
    throw OverflowError("rational arithmetic exceeded the 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Exact rational number.  Stored in lowest terms with a positive
/// denominator; all arithmetic goes through 128-bit intermediates and throws
/// OverflowError instead of silently wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    normalize(num, den);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(detail::int128(a.num_) * b.den_ +
                       detail::int128(b.num_) * a.den_,
                   detail::int128(a.den_) * b.den_);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(detail::int128(a.num_) * b.den_ -
                       detail::int128(b.num_) * a.den_,
                   detail::int128(a.den_) * b.den_);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(detail::int128(a.num_) * b.num_,
                   detail::int128(a.den_) * b.den_);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivisionByZeroError("rational division by zero");
    return from128(detail::int128(a.num_) * b.den_,
                   detail::int128(a.den_) * b.num_);
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    detail::int128 lhs = detail::int128(a.num_) * b.den_;
    detail::int128 rhs = detail::int128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Renders as "p" for integers and "p/q" otherwise.
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Parses "p" or "p/q" with decimal digits; a leading '-' is accepted so
  /// the simplex kernel can round-trip its values.
  static Rational parse(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text));
    }
    std::int64_t n = parse_int(text.substr(0, slash));
    std::int64_t d = parse_int(text.substr(slash + 1));
    return Rational(n, d);
  }

 private:
  static Rational from128(detail::int128 num, detail::int128 den) {
    Rational r;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    detail::int128 g = detail::gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    r.num_ = detail::narrow128(num);
    r.den_ = den == 0 ? 1 : detail::narrow128(den);
    if (r.num_ == 0) r.den_ = 1;
    return r;
  }

  void normalize(std::int64_t num, std::int64_t den) {
    *this = from128(detail::int128(num), detail::int128(den));
  }

  static std::int64_t parse_int(std::string_view digits) {
    if (digits.empty()) throw Error("empty numeral");
    std::size_t i = 0;
    bool neg = false;
    if (digits[0] == '-') {
      neg = true;
      i = 1;
      if (digits.size() == 1) throw Error("bare sign is not a numeral");
    }
    detail::int128 v = 0;
    for (; i < digits.size(); ++i) {
      char c = digits[i];
      if (c < '0' || c > '9') throw Error("invalid digit in numeral");
      v = v * 10 + (c - '0');
      if (v > detail::int128(std::numeric_limits<std::int64_t>::max())) {
        throw OverflowError("numeral does not fit in 64 bits");
      }
    }
    return neg ? -static_cast<std::int64_t>(v)
               : static_cast<std::int64_t>(v);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace convexalg
