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

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convexalg/errors.hpp"
#include "convexalg/rng.hpp"
#include "convexalg/semiring.hpp"

namespace convexalg {

/// Properties of a semiring that govern which of the constructions in this
/// library apply to it.  Beyond the three named ones:
///   (A)  a + b = 1  implies  a = 0 or b = 0
///   (B)  a * b = 0  implies  a = 0 or b = 0
///   (C)  a + c = b + c  implies  a = b
///   (D)  for all a, b there is x with a + x = b or b + x = a
///   (E)  a + b = c * d  implies there is t : {(x,y) | x+y=d} -> S with
///        sum t(x,y)*x = a,  sum t(x,y)*y = b,  sum t(x,y) = c
enum class SemiringProperty {
  positive,
  semifield,
  refinable,
  prop_a,
  prop_b,
  prop_c,
  prop_d,
  prop_e,
};

inline const char* to_string(SemiringProperty p) {
  switch (p) {
    case SemiringProperty::positive: return "positive";
    case SemiringProperty::semifield: return "semifield";
    case SemiringProperty::refinable: return "refinable";
    case SemiringProperty::prop_a: return "A";
    case SemiringProperty::prop_b: return "B";
    case SemiringProperty::prop_c: return "C";
    case SemiringProperty::prop_d: return "D";
    case SemiringProperty::prop_e: return "E";
  }
  return "?";
}

inline std::optional<SemiringProperty> parse_property(std::string_view s) {
  if (s == "positive") return SemiringProperty::positive;
  if (s == "semifield") return SemiringProperty::semifield;
  if (s == "refinable") return SemiringProperty::refinable;
  if (s == "A" || s == "a") return SemiringProperty::prop_a;
  if (s == "B" || s == "b") return SemiringProperty::prop_b;
  if (s == "C" || s == "c") return SemiringProperty::prop_c;
  if (s == "D" || s == "d") return SemiringProperty::prop_d;
  if (s == "E" || s == "e") return SemiringProperty::prop_e;
  return std::nullopt;
}

struct PropertyVerdict {
  enum class Kind { holds_exhaustive, holds_sampled, fails };

  Kind kind = Kind::holds_sampled;
  /// Rendered tuple violating the property, present only when kind == fails.
  std::vector<std::string> witness;

  bool holds() const { return kind != Kind::fails; }
};

/// Multiplicative inverse.  Defined on semifield instances for nonzero
/// arguments only.
template <Semiring S>
typename S::value_type inverse(const typename S::value_type& a) {
  if constexpr (!S::semifield) {
    throw UnsupportedError(std::string(S::name) + " has no inverses");
  } else {
    if (a == S::zero()) throw DivisionByZeroError("inverse of zero");
    return *S::try_inverse(a);
  }
}

/// Complete duplicate-free listing of the carrier; enumerable instances only.
template <Semiring S>
std::vector<typename S::value_type> enumerate_values() {
  if constexpr (S::enumerable) {
    return S::enumerate();
  } else {
    throw UnsupportedError(std::string(S::name) + " is not enumerable");
  }
}

/// Quadruple (x, y, z, t) with x+y=a, z+t=b, x+z=c, y+t=d, for a positive
/// semifield where a+b = c+d.  When a+b = 0 every component is zero,
/// otherwise x = ac/(c+d), y = ad/(c+d), z = bc/(c+d), t = bd/(c+d).
template <Semiring S>
std::array<typename S::value_type, 4> refinement_witness(
    const typename S::value_type& a, const typename S::value_type& b,
    const typename S::value_type& c, const typename S::value_type& d) {
  if constexpr (!S::semifield) {
    throw UnsupportedError(std::string(S::name) + " is not a semifield");
  } else {
    typename S::value_type ab = S::add(a, b);
    if (!(ab == S::add(c, d))) {
      throw PreconditionError("refinement requires a + b = c + d");
    }
    if (ab == S::zero()) {
      return {S::zero(), S::zero(), S::zero(), S::zero()};
    }
    typename S::value_type inv = inverse<S>(ab);
    return {S::mul(S::mul(a, c), inv), S::mul(S::mul(a, d), inv),
            S::mul(S::mul(b, c), inv), S::mul(S::mul(b, d), inv)};
  }
}

namespace detail {

/// Candidate elements for property checks: the full carrier when enumerable,
/// otherwise `budget` deterministic samples.  For naturals the scan is in
/// increasing order so that failing properties report minimal witnesses.
template <Semiring S>
std::vector<typename S::value_type> property_candidates(int budget, Rng& rng) {
  if constexpr (S::enumerable) {
    return S::enumerate();
  } else if constexpr (S::id == SemiringId::natural) {
    std::vector<typename S::value_type> out;
    for (int i = 0; i <= budget; ++i) {
      out.push_back(static_cast<typename S::value_type>(i));
    }
    return out;
  } else {
    std::vector<typename S::value_type> out;
    out.push_back(S::zero());
    out.push_back(S::one());
    for (int i = 0; i < budget; ++i) out.push_back(S::sample(rng));
    return out;
  }
}

template <Semiring S>
PropertyVerdict verdict_holds() {
  return {S::enumerable ? PropertyVerdict::Kind::holds_exhaustive
                        : PropertyVerdict::Kind::holds_sampled,
          {}};
}

template <Semiring S, class... V>
PropertyVerdict verdict_fails(const V&... parts) {
  PropertyVerdict v;
  v.kind = PropertyVerdict::Kind::fails;
  (v.witness.push_back(S::to_string(parts)), ...);
  return v;
}

/// Splits of `total` as an ordered pair (c, total - c).
template <Semiring S>
std::vector<std::pair<typename S::value_type, typename S::value_type>>
additive_splits(const typename S::value_type& total, int budget, Rng& rng) {
  using V = typename S::value_type;
  std::vector<std::pair<V, V>> out;
  if constexpr (S::enumerable) {
    for (const V& c : S::enumerate()) {
      for (const V& d : S::enumerate()) {
        if (S::add(c, d) == total) out.emplace_back(c, d);
      }
    }
  } else if constexpr (S::id == SemiringId::natural) {
    for (V c = 0; c <= total && static_cast<int>(c) <= budget; ++c) {
      out.emplace_back(c, total - c);
    }
  } else {
    for (int i = 0; i < budget; ++i) {
      auto k = static_cast<std::int64_t>(rng.below(21));
      V c = S::mul(total, Rational(k, 20));
      out.emplace_back(c, *S::try_subtract(total, c));
    }
  }
  return out;
}

}  // namespace detail

/// Reports every semiring axiom violated within the budget; enumerable
/// instances are checked exhaustively over all triples.  An empty report
/// means no violation was found.
template <Semiring S>
std::vector<std::string> check_axioms(int budget,
                                      std::uint64_t seed = default_seed) {
  if (budget < 1) throw PreconditionError("budget must be at least 1");
  using V = typename S::value_type;
  Rng rng(seed);

  std::vector<std::string> report;
  auto violation = [&](const char* law, const V& a, const V& b, const V& c) {
    report.push_back(std::string(law) + " violated at (" + S::to_string(a) +
                     ", " + S::to_string(b) + ", " + S::to_string(c) + ")");
  };

  auto check_triple = [&](const V& a, const V& b, const V& c) {
    if (!(S::add(S::add(a, b), c) == S::add(a, S::add(b, c))))
      violation("additive associativity", a, b, c);
    if (!(S::add(a, b) == S::add(b, a))) violation("commutativity", a, b, c);
    if (!(S::add(a, S::zero()) == a)) violation("additive unit", a, b, c);
    if (!(S::mul(S::mul(a, b), c) == S::mul(a, S::mul(b, c))))
      violation("multiplicative associativity", a, b, c);
    if (!(S::mul(a, S::one()) == a) || !(S::mul(S::one(), a) == a))
      violation("multiplicative unit", a, b, c);
    if (!(S::mul(a, S::add(b, c)) == S::add(S::mul(a, b), S::mul(a, c))))
      violation("left distributivity", a, b, c);
    if (!(S::mul(S::add(a, b), c) == S::add(S::mul(a, c), S::mul(b, c))))
      violation("right distributivity", a, b, c);
    if (!(S::mul(a, S::zero()) == S::zero()) ||
        !(S::mul(S::zero(), a) == S::zero()))
      violation("annihilation", a, b, c);
  };

  if constexpr (S::enumerable) {
    for (const V& a : S::enumerate())
      for (const V& b : S::enumerate())
        for (const V& c : S::enumerate()) check_triple(a, b, c);
  } else {
    for (int i = 0; i < budget; ++i) {
      check_triple(S::sample(rng), S::sample(rng), S::sample(rng));
    }
  }
  return report;
}

/// Decides one property, exhaustively on enumerable instances and on
/// sampled/constructed instances otherwise.  Property (E) quantifies over
/// functions on the set of additive splits of d, which is infinite on
/// non-enumerable instances; those report unsupported-combination.
template <Semiring S>
PropertyVerdict check_property(SemiringProperty prop, int budget,
                               std::uint64_t seed = default_seed) {
  if (budget < 1) throw PreconditionError("budget must be at least 1");
  using V = typename S::value_type;
  Rng rng(seed);
  // Exhaustive carrier on enumerable instances; `budget` sampled rounds
  // otherwise, with fresh draws per round.
  std::vector<V> candidates = detail::property_candidates<S>(budget, rng);

  auto each_pair = [&](auto&& fn) -> PropertyVerdict {
    if constexpr (S::enumerable) {
      for (const V& a : candidates)
        for (const V& b : candidates) {
          if (auto v = fn(a, b)) return *v;
        }
    } else {
      for (int i = 0; i < budget; ++i) {
        if (auto v = fn(S::sample(rng), S::sample(rng))) return *v;
      }
    }
    return detail::verdict_holds<S>();
  };

  switch (prop) {
    case SemiringProperty::positive: {
      return each_pair([&](const V& a,
                           const V& b) -> std::optional<PropertyVerdict> {
        if (S::add(a, b) == S::zero() && !(a == S::zero() && b == S::zero()))
          return detail::verdict_fails<S>(a, b);
        return std::nullopt;
      });
    }

    case SemiringProperty::semifield: {
      auto bad = [](const V& a) {
        if (a == S::zero()) return false;
        auto inv = S::try_inverse(a);
        return !inv || !(S::mul(a, *inv) == S::one()) ||
               !(S::mul(*inv, a) == S::one());
      };
      for (const V& a : candidates) {
        if (bad(a)) return detail::verdict_fails<S>(a);
      }
      return detail::verdict_holds<S>();
    }

    case SemiringProperty::refinable: {
      auto witness_exists = [&](const V& a, const V& b, const V& c,
                                const V& d) {
        if constexpr (S::semifield) {
          auto w = refinement_witness<S>(a, b, c, d);
          return S::add(w[0], w[1]) == a && S::add(w[2], w[3]) == b &&
                 S::add(w[0], w[2]) == c && S::add(w[1], w[3]) == d;
        } else {
          // Scan over x; the remaining components are forced.
          for (const auto& [x, y] :
               detail::additive_splits<S>(a, budget, rng)) {
            auto z = S::try_subtract(c, x);
            if (!z) continue;
            auto t = S::try_subtract(b, *z);
            if (!t) continue;
            if (S::add(y, *t) == d) return true;
          }
          return false;
        }
      };
      if constexpr (S::enumerable) {
        for (const V& a : candidates) {
          for (const V& b : candidates) {
            V total = S::add(a, b);
            for (const V& c : candidates) {
              for (const V& d : candidates) {
                if (!(S::add(c, d) == total)) continue;
                if (!witness_exists(a, b, c, d))
                  return detail::verdict_fails<S>(a, b, c, d);
              }
            }
          }
        }
      } else {
        for (int i = 0; i < budget; ++i) {
          V a = S::sample(rng), b = S::sample(rng);
          auto splits = detail::additive_splits<S>(S::add(a, b), 1, rng);
          for (const auto& [c, d] : splits) {
            if (!witness_exists(a, b, c, d))
              return detail::verdict_fails<S>(a, b, c, d);
          }
        }
      }
      return detail::verdict_holds<S>();
    }

    case SemiringProperty::prop_a: {
      for (const auto& [a, b] :
           detail::additive_splits<S>(S::one(), budget, rng)) {
        if (!(a == S::zero()) && !(b == S::zero()))
          return detail::verdict_fails<S>(a, b);
      }
      return detail::verdict_holds<S>();
    }

    case SemiringProperty::prop_b: {
      return each_pair([&](const V& a,
                           const V& b) -> std::optional<PropertyVerdict> {
        if (S::mul(a, b) == S::zero() && !(a == S::zero()) &&
            !(b == S::zero()))
          return detail::verdict_fails<S>(a, b);
        return std::nullopt;
      });
    }

    case SemiringProperty::prop_c: {
      if constexpr (S::enumerable) {
        for (const V& a : candidates)
          for (const V& b : candidates)
            for (const V& c : candidates)
              if (S::add(a, c) == S::add(b, c) && !(a == b))
                return detail::verdict_fails<S>(a, b, c);
      } else {
        for (int i = 0; i < budget; ++i) {
          V a = S::sample(rng), b = S::sample(rng), c = S::sample(rng);
          if (S::add(a, c) == S::add(b, c) && !(a == b))
            return detail::verdict_fails<S>(a, b, c);
        }
      }
      return detail::verdict_holds<S>();
    }

    case SemiringProperty::prop_d: {
      return each_pair([&](const V& a,
                           const V& b) -> std::optional<PropertyVerdict> {
        bool found = S::try_subtract(b, a).has_value() ||
                     S::try_subtract(a, b).has_value();
        if (!found) return detail::verdict_fails<S>(a, b);
        return std::nullopt;
      });
    }

    case SemiringProperty::prop_e: {
      if constexpr (!S::enumerable) {
        throw UnsupportedError(
            "property E quantifies over functions on an infinite split set");
      } else {
        std::vector<V> all = S::enumerate();
        for (const V& a : all) {
          for (const V& b : all) {
            for (const V& c : all) {
              for (const V& d : all) {
                if (!(S::add(a, b) == S::mul(c, d))) continue;
                std::vector<std::pair<V, V>> splits;
                for (const V& x : all)
                  for (const V& y : all)
                    if (S::add(x, y) == d) splits.emplace_back(x, y);
                // Mixed-radix scan over all functions splits -> carrier.
                bool found = false;
                std::vector<std::size_t> digits(splits.size(), 0);
                bool done = false;
                while (!done && !found) {
                  V sx = S::zero(), sy = S::zero(), st = S::zero();
                  for (std::size_t i = 0; i < splits.size(); ++i) {
                    const V& t = all[digits[i]];
                    sx = S::add(sx, S::mul(t, splits[i].first));
                    sy = S::add(sy, S::mul(t, splits[i].second));
                    st = S::add(st, t);
                  }
                  found = sx == a && sy == b && st == c;
                  done = true;
                  for (std::size_t i = 0; i < digits.size(); ++i) {
                    if (++digits[i] < all.size()) {
                      done = false;
                      break;
                    }
                    digits[i] = 0;
                  }
                }
                if (!found) return detail::verdict_fails<S>(a, b, c, d);
              }
            }
          }
        }
        return detail::verdict_holds<S>();
      }
    }
  }
  throw PreconditionError("unknown property");
}

}  // namespace convexalg
