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

#include <concepts>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "convexalg/errors.hpp"
#include "convexalg/rational.hpp"
#include "convexalg/rng.hpp"

namespace convexalg {

/// Identifiers of the basis set X.  Ordered lexicographically, which fixes
/// the canonical entry order everywhere.
using BasisElement = std::string;
using Basis = std::set<BasisElement>;

enum class SemiringId { boolean, rational_nonneg, natural };

/// A semiring instance: a value type plus its operation table and capability
/// flags, all static.  The three instances below are the supported ones;
/// test code may define deliberately broken instances to drive the axiom
/// checker.
template <class S>
concept Semiring = requires(typename S::value_type a, typename S::value_type b,
                            Rng& rng, std::string_view text) {
  { S::id } -> std::convertible_to<SemiringId>;
  { S::name } -> std::convertible_to<const char*>;
  { S::enumerable } -> std::convertible_to<bool>;
  { S::semifield } -> std::convertible_to<bool>;
  { S::positive } -> std::convertible_to<bool>;
  { S::zero() } -> std::same_as<typename S::value_type>;
  { S::one() } -> std::same_as<typename S::value_type>;
  { S::add(a, b) } -> std::same_as<typename S::value_type>;
  { S::mul(a, b) } -> std::same_as<typename S::value_type>;
  { S::sample(rng) } -> std::same_as<typename S::value_type>;
  { S::parse(text) } -> std::same_as<typename S::value_type>;
  { S::to_string(a) } -> std::same_as<std::string>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
};

/// The two-element semiring: join as addition, meet as multiplication.
struct BoolSemiring {
  using value_type = bool;
  static constexpr SemiringId id = SemiringId::boolean;
  static constexpr const char* name = "bool";
  static constexpr bool enumerable = true;
  static constexpr bool semifield = true;
  static constexpr bool positive = true;

  static value_type zero() { return false; }
  static value_type one() { return true; }
  static value_type add(value_type a, value_type b) { return a || b; }
  static value_type mul(value_type a, value_type b) { return a && b; }

  static std::optional<value_type> try_inverse(value_type a) {
    if (!a) return std::nullopt;
    return true;
  }

  /// Least x with a + x = b, when one exists.
  static std::optional<value_type> try_subtract(value_type b, value_type a) {
    if (a && !b) return std::nullopt;
    return a == b ? std::optional<value_type>(false)
                  : std::optional<value_type>(true);
  }

  static std::vector<value_type> enumerate() { return {false, true}; }

  static value_type sample(Rng& rng) { return rng.coin(); }

  static value_type parse(std::string_view text) {
    if (text == "0") return false;
    if (text == "1") return true;
    throw Error("boolean literal must be 0 or 1, got '" + std::string(text) +
                "'");
  }

  static std::string to_string(value_type v) { return v ? "1" : "0"; }
};

/// Nonnegative rationals with exact arithmetic.
struct QPlusSemiring {
  using value_type = Rational;
  static constexpr SemiringId id = SemiringId::rational_nonneg;
  static constexpr const char* name = "rat";
  static constexpr bool enumerable = false;
  static constexpr bool semifield = true;
  static constexpr bool positive = true;

  static value_type zero() { return Rational(0); }
  static value_type one() { return Rational(1); }
  static value_type add(const value_type& a, const value_type& b) {
    return a + b;
  }
  static value_type mul(const value_type& a, const value_type& b) {
    return a * b;
  }

  static std::optional<value_type> try_inverse(const value_type& a) {
    if (a.is_zero()) return std::nullopt;
    return Rational(1) / a;
  }

  static std::optional<value_type> try_subtract(const value_type& b,
                                                const value_type& a) {
    if (a > b) return std::nullopt;
    return b - a;
  }

  /// Numerators uniform in [0, 20], denominators in [1, 20].
  static value_type sample(Rng& rng) {
    auto num = static_cast<std::int64_t>(rng.below(21));
    auto den = static_cast<std::int64_t>(1 + rng.below(20));
    return Rational(num, den);
  }

  static value_type parse(std::string_view text) {
    Rational r = Rational::parse(text);
    if (r.is_negative()) {
      throw Error("nonnegative rational expected, got '" + std::string(text) +
                  "'");
    }
    return r;
  }

  static std::string to_string(const value_type& v) { return v.to_string(); }
};

/// Natural numbers with overflow-checked arithmetic.
struct NatSemiring {
  using value_type = std::uint64_t;
  static constexpr SemiringId id = SemiringId::natural;
  static constexpr const char* name = "nat";
  static constexpr bool enumerable = false;
  static constexpr bool semifield = false;
  static constexpr bool positive = true;

  static value_type zero() { return 0; }
  static value_type one() { return 1; }

  static value_type add(value_type a, value_type b) {
    value_type r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw OverflowError("natural addition overflow");
    }
    return r;
  }

  static value_type mul(value_type a, value_type b) {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw OverflowError("natural multiplication overflow");
    }
    return r;
  }

  static std::optional<value_type> try_inverse(value_type a) {
    if (a == 1) return 1;
    return std::nullopt;
  }

  static std::optional<value_type> try_subtract(value_type b, value_type a) {
    if (a > b) return std::nullopt;
    return b - a;
  }

  static value_type sample(Rng& rng) { return rng.below(21); }

  static value_type parse(std::string_view text) {
    value_type v = 0;
    if (text.empty()) throw Error("empty natural literal");
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw Error("natural literal expected, got '" + std::string(text) +
                    "'");
      }
      v = mul(v, 10);
      v = add(v, static_cast<value_type>(c - '0'));
    }
    return v;
  }

  static std::string to_string(value_type v) { return std::to_string(v); }
};

static_assert(Semiring<BoolSemiring>);
static_assert(Semiring<QPlusSemiring>);
static_assert(Semiring<NatSemiring>);

}  // namespace convexalg
