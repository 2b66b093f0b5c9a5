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

#include <algorithm>
#include <compare>
#include <set>
#include <span>
#include <vector>

#include "convexalg/errors.hpp"
#include "convexalg/finsupp.hpp"
#include "convexalg/simplex.hpp"

namespace convexalg {

/// True iff phi is a combination  sum t_g * g  over the generators with
/// nonnegative coefficients summing to one.
///
/// Per instance: nonnegative rationals reduce to an exact phase-1 simplex
/// feasibility problem; booleans use the join trick (the join of all
/// generators pointwise below phi must reach phi); naturals admit only the
/// trivial combinations, so membership is exact equality with a generator.
/// An empty generator list never contains anything.
template <Semiring S, class K>
bool hull_membership(const FinSupp<S, K>& phi,
                     std::span<const FinSupp<S, K>> generators) {
  if (generators.empty()) return false;

  if constexpr (S::id == SemiringId::boolean) {
    FinSupp<S, K> joined;
    bool any_below = false;
    for (const auto& g : generators) {
      bool below = true;
      for (const auto& [k, v] : g.entries()) {
        if (!phi.contains(k)) {
          below = false;
          break;
        }
      }
      if (below) {
        any_below = true;
        joined = add(joined, g);
      }
    }
    return any_below && joined == phi;
  } else if constexpr (S::id == SemiringId::rational_nonneg) {
    std::set<K> keys;
    for (const auto& [k, v] : phi.entries()) keys.insert(k);
    for (const auto& g : generators) {
      for (const auto& [k, v] : g.entries()) keys.insert(k);
    }
    // One equation per touched key plus the normalisation row.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const K& k : keys) {
      std::vector<Rational> row;
      row.reserve(generators.size());
      for (const auto& g : generators) row.push_back(g.at(k));
      rows.push_back(std::move(row));
      rhs.push_back(phi.at(k));
    }
    rows.emplace_back(generators.size(), Rational(1));
    rhs.emplace_back(1);
    return feasible_nonneg(std::move(rows), std::move(rhs));
  } else {
    for (const auto& g : generators) {
      if (g == phi) return true;
    }
    return false;
  }
}

template <Semiring S, class K>
bool hull_membership(const FinSupp<S, K>& phi,
                     const std::vector<FinSupp<S, K>>& generators) {
  return hull_membership(phi, std::span<const FinSupp<S, K>>(generators));
}

/// Finitely generated convex subset of the free semimodule over a basis,
/// represented by a finite generator list.  The empty generator list denotes
/// the empty convex set, which is distinct from the set generated by the
/// zero vector alone.
template <Semiring S, std::totally_ordered K = BasisElement>
class ConvexSet {
 public:
  using semiring = S;
  using key_type = K;
  using generator_type = FinSupp<S, K>;

  ConvexSet() = default;

  ConvexSet(std::set<K> basis, std::vector<generator_type> generators)
      : basis_(std::move(basis)), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
      for (const auto& [k, v] : g.entries()) {
        if (!basis_.contains(k)) {
          throw PreconditionError(
              "generator support escapes the declared basis");
        }
      }
    }
  }

  static ConvexSet empty(std::set<K> basis) {
    return ConvexSet(std::move(basis), {});
  }

  const std::set<K>& basis() const { return basis_; }
  const std::vector<generator_type>& generators() const { return generators_; }
  bool is_empty() const { return generators_.empty(); }
  bool is_canonical() const { return canonical_; }

  friend bool operator==(const ConvexSet& a, const ConvexSet& b) {
    return a.basis_ == b.basis_ && a.generators_ == b.generators_;
  }

  /// Structural order (basis, then generator list); used when convex sets
  /// serve as keys of finitely supported functions.
  friend std::strong_ordering operator<=>(const ConvexSet& a,
                                          const ConvexSet& b) {
    auto c = std::lexicographical_compare_three_way(
        a.basis_.begin(), a.basis_.end(), b.basis_.begin(), b.basis_.end());
    if (c != std::strong_ordering::equal) return c;
    return std::lexicographical_compare_three_way(
        a.generators_.begin(), a.generators_.end(), b.generators_.begin(),
        b.generators_.end());
  }

  template <Semiring S2, std::totally_ordered K2>
  friend ConvexSet<S2, K2> canonicalize(ConvexSet<S2, K2> c);

 private:
  std::set<K> basis_;
  std::vector<generator_type> generators_;
  bool canonical_ = false;
};

/// Sorts and deduplicates the generators, then repeatedly drops any
/// generator lying in the hull of the remaining ones (scanning in sorted
/// order), leaving the unique irredundant generating set.  The denoted hull
/// is unchanged.
template <Semiring S, std::totally_ordered K>
ConvexSet<S, K> canonicalize(ConvexSet<S, K> c) {
  auto& gens = c.generators_;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<FinSupp<S, K>> rest;
      rest.reserve(gens.size() - 1);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j != i) rest.push_back(gens[j]);
      }
      if (hull_membership(gens[i], rest)) {
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  c.canonical_ = true;
  return c;
}

/// Convenience: the canonical convex set generated by the given list.
template <Semiring S, std::totally_ordered K>
ConvexSet<S, K> hull(std::set<K> basis,
                     std::vector<FinSupp<S, K>> generators) {
  return canonicalize(ConvexSet<S, K>(std::move(basis), std::move(generators)));
}

template <Semiring S, class K>
bool hull_membership(const FinSupp<S, K>& phi, const ConvexSet<S, K>& c) {
  return hull_membership(phi, c.generators());
}

/// Semantic equality of denoted hulls: mutual membership of generators.
/// Both sets must live over the same basis.
template <Semiring S, class K>
bool equal(const ConvexSet<S, K>& a, const ConvexSet<S, K>& b) {
  if (a.basis() != b.basis()) {
    throw BasisMismatchError("convex sets over different bases");
  }
  if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
  for (const auto& g : a.generators()) {
    if (!hull_membership(g, b.generators())) return false;
  }
  for (const auto& g : b.generators()) {
    if (!hull_membership(g, a.generators())) return false;
  }
  return true;
}

/// The full element listing of the hull: closure of the generators under
/// binary joins.  Only the boolean instance has finite hulls.
template <Semiring S, class K>
std::vector<FinSupp<S, K>> saturate(const ConvexSet<S, K>& c) {
  if constexpr (S::id != SemiringId::boolean) {
    throw UnsupportedError("hull saturation requires the boolean instance");
  } else {
    std::set<FinSupp<S, K>> closure(c.generators().begin(),
                                    c.generators().end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<FinSupp<S, K>> snapshot(closure.begin(), closure.end());
      for (std::size_t i = 0; i < snapshot.size(); ++i) {
        for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
          FinSupp<S, K> joined = add(snapshot[i], snapshot[j]);
          if (closure.insert(joined).second) grew = true;
        }
      }
    }
    return {closure.begin(), closure.end()};
  }
}

/// True iff an explicitly listed finite set equals its own hull.
template <Semiring S, class K>
bool is_convex_explicit(const std::vector<FinSupp<S, K>>& elements) {
  if constexpr (S::id != SemiringId::boolean) {
    throw UnsupportedError("explicit convexity requires the boolean instance");
  } else {
    std::set<FinSupp<S, K>> as_set(elements.begin(), elements.end());
    std::set<K> keys;
    for (const auto& e : elements) {
      for (const auto& [k, v] : e.entries()) keys.insert(k);
    }
    ConvexSet<S, K> c(std::move(keys),
                      std::vector<FinSupp<S, K>>(as_set.begin(), as_set.end()));
    auto closed = saturate(c);
    return std::set<FinSupp<S, K>>(closed.begin(), closed.end()) == as_set;
  }
}

}  // namespace convexalg
