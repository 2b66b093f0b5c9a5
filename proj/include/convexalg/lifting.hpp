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
#include <type_traits>
#include <map>
#include <set>
#include <vector>

#include "convexalg/algebra.hpp"
#include "convexalg/convexset.hpp"
#include "convexalg/distlaw.hpp"
#include "convexalg/errors.hpp"

namespace convexalg {

// The powerset monad lifted to algebras of the semimodule monad lives in two
// regimes here.  Explicit finite carriers (boolean instance only) make every
// hull enumerable, which is what the abstract equalities are certified on.
// The free carrier over a basis works for every instance, with ConvexSet
// generators standing in for the sets; that regime is what the composed
// monad is built from.

// ---------------------------------------------------------------------------
// Explicit finite carriers.

/// Convex closure inside a finite algebra: all values of the structure map
/// on vectors supported in A with total weight one.  Finite only over the
/// booleans (where it is the closure under joins of nonempty subsets); over
/// the naturals every set is its own closure.
template <Semiring S, class E>
std::vector<E> convclos_in_algebra(const FiniteAlgebra<S, E>& a,
                                   const std::vector<E>& subset) {
  std::vector<E> elems(subset);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (const E& x : elems) {
    if (!a.in_carrier(x)) {
      throw PreconditionError("subset escapes the algebra carrier");
    }
  }

  if constexpr (S::id == SemiringId::natural) {
    return elems;
  } else if constexpr (S::id == SemiringId::boolean) {
    if (elems.size() > 20) throw ResourceLimitError("subset too large");
    std::set<E> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << elems.size());
         ++mask) {
      std::vector<typename FinSupp<S, E>::entry_type> entries;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if ((mask >> i) & 1) entries.emplace_back(elems[i], true);
      }
      out.insert(a.structure(FinSupp<S, E>(std::move(entries))));
    }
    return {out.begin(), out.end()};
  } else {
    throw UnsupportedError(
        "explicit convex closure needs an enumerable weight space; use "
        "ConvexSet generators instead");
  }
}

/// The idempotent whose splitting carries the lifting: wrap the subset as a
/// Dirac-weighted family, run the law, map the structure map over the
/// result.  Coincides with the convex closure.
template <class E>
std::vector<E> idempotent_e(const FiniteAlgebra<BoolSemiring, E>& a,
                            const std::vector<E>& subset) {
  std::set<E> member(subset.begin(), subset.end());
  for (const E& x : member) {
    if (!a.in_carrier(x)) {
      throw PreconditionError("subset escapes the algebra carrier");
    }
  }
  std::set<E> carrier_basis(a.carrier.begin(), a.carrier.end());
  auto dirac = WeightedFamily<BoolSemiring, E>::unit(member);
  std::set<E> out;
  for (const auto& phi :
       delta_enumerate(dirac, carrier_basis, carrier_basis.size())) {
    out.insert(a.structure(phi));
  }
  return {out.begin(), out.end()};
}

/// Structure map of the lifted algebra on an explicit carrier: the image of
/// the choice set under the structure map.  Every weighted subset must be
/// convex.
template <class E>
std::vector<E> alpha(const FiniteAlgebra<BoolSemiring, E>& a,
                     const FinSupp<BoolSemiring, std::set<E>>& weighting) {
  for (const auto& [member, w] : weighting.entries()) {
    std::vector<E> elems(member.begin(), member.end());
    auto closed = convclos_in_algebra(a, elems);
    if (std::set<E>(closed.begin(), closed.end()) != member) {
      throw PreconditionError("weighted subset is not convex in the algebra");
    }
  }
  std::set<E> out;
  for (const auto& phi : choice_set(weighting)) {
    out.insert(a.structure(phi));
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// The free carrier: semimodule structure on convex sets over a basis.

/// Scalar action on a convex set, computed on generators.  Scaling by zero
/// collapses everything, including the empty set, to the point at zero.
template <Semiring S, class K>
ConvexSet<S, K> scale_set(const typename S::value_type& lambda,
                          const ConvexSet<S, K>& c) {
  if (lambda == S::zero()) {
    return canonicalize(
        ConvexSet<S, K>(c.basis(), {FinSupp<S, K>::zero()}));
  }
  std::vector<FinSupp<S, K>> gens;
  gens.reserve(c.generators().size());
  for (const auto& g : c.generators()) gens.push_back(scale(lambda, g));
  return canonicalize(ConvexSet<S, K>(c.basis(), std::move(gens)));
}

/// Minkowski sum on generators; an empty operand annihilates the sum.
template <Semiring S, class K>
ConvexSet<S, K> add_set(const ConvexSet<S, K>& a, const ConvexSet<S, K>& b) {
  if (a.basis() != b.basis()) {
    throw BasisMismatchError("convex sets over different bases");
  }
  std::vector<FinSupp<S, K>> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& ga : a.generators()) {
    for (const auto& gb : b.generators()) {
      gens.push_back(add(ga, gb));
    }
  }
  return canonicalize(ConvexSet<S, K>(a.basis(), std::move(gens)));
}

/// The additive unit: the singleton at the zero vector.
template <Semiring S, std::totally_ordered K = BasisElement>
ConvexSet<S, K> zero_set(std::set<K> basis) {
  return canonicalize(
      ConvexSet<S, K>(std::move(basis), {FinSupp<S, K>::zero()}));
}

/// Binary join: the convex span of the union of generators.
template <Semiring S, class K>
ConvexSet<S, K> join_sets(const ConvexSet<S, K>& a, const ConvexSet<S, K>& b) {
  if (a.basis() != b.basis()) {
    throw BasisMismatchError("convex sets over different bases");
  }
  std::vector<FinSupp<S, K>> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return canonicalize(ConvexSet<S, K>(a.basis(), std::move(gens)));
}

/// Image of a convex set under a basis function, generator by generator.
template <Semiring S, class K, class K2>
ConvexSet<S, K2> lifted_map(const std::map<K, K2>& f, const ConvexSet<S, K>& c,
                            std::set<K2> target_basis) {
  std::vector<FinSupp<S, K2>> gens;
  gens.reserve(c.generators().size());
  for (const auto& g : c.generators()) gens.push_back(map_along(f, g));
  return canonicalize(
      ConvexSet<S, K2>(std::move(target_basis), std::move(gens)));
}

/// Image under a basis function whose target is its own value set.
template <Semiring S, class K, class K2>
ConvexSet<S, K2> lifted_map(const std::map<K, K2>& f,
                            const ConvexSet<S, K>& c) {
  std::set<K2> target;
  for (const auto& [k, v] : f) target.insert(v);
  return lifted_map(f, c, std::move(target));
}

/// The lifted unit: the singleton at a Dirac vector.
template <Semiring S, std::totally_ordered K = BasisElement>
ConvexSet<S, K> lifted_unit(const std::type_identity_t<K>& x,
                            std::set<K> basis) {
  if (!basis.contains(x)) {
    throw PreconditionError("unit element outside the basis");
  }
  return canonicalize(
      ConvexSet<S, K>(std::move(basis), {FinSupp<S, K>::unit(x)}));
}

/// The lifted multiplication on a convex family of convex sets: the union of
/// the members is already convex, so only generator pruning remains.
template <Semiring S, class K>
ConvexSet<S, K> lifted_mult(const std::vector<ConvexSet<S, K>>& members,
                            std::set<K> basis) {
  std::vector<FinSupp<S, K>> gens;
  for (const auto& m : members) {
    if (m.basis() != basis) {
      throw BasisMismatchError("family member over a different basis");
    }
    gens.insert(gens.end(), m.generators().begin(), m.generators().end());
  }
  return canonicalize(ConvexSet<S, K>(std::move(basis), std::move(gens)));
}

/// The lifted structure map in the free regime: a weighting of convex sets
/// goes to the convex span of the weighted sums that pick one generator per
/// weighted set.  The empty weighting yields the zero singleton; an empty
/// weighted set admits no picks, so the result is empty.
template <Semiring S, class K>
ConvexSet<S, K> alpha_free(const FinSupp<S, ConvexSet<S, K>>& weighting,
                           std::set<K> basis,
                           std::size_t max_tuples = default_choice_cap) {
  std::vector<std::vector<FinSupp<S, K>>> pools;
  std::vector<typename S::value_type> weights;
  std::size_t count = 1;
  for (const auto& [member, w] : weighting.entries()) {
    if (member.basis() != basis) {
      throw BasisMismatchError("weighted set over a different basis");
    }
    if (member.is_empty()) {
      return ConvexSet<S, K>::empty(std::move(basis));
    }
    pools.push_back(member.generators());
    weights.push_back(w);
    if (count > max_tuples / member.generators().size()) {
      throw ResourceLimitError("too many generator tuples");
    }
    count *= member.generators().size();
  }

  std::vector<FinSupp<S, K>> gens;
  std::vector<std::size_t> pick(pools.size(), 0);
  for (;;) {
    FinSupp<S, K> sum;
    for (std::size_t i = 0; i < pools.size(); ++i) {
      sum = add(sum, scale(weights[i], pools[i][pick[i]]));
    }
    gens.push_back(std::move(sum));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < pools[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return canonicalize(ConvexSet<S, K>(std::move(basis), std::move(gens)));
}

}  // namespace convexalg
