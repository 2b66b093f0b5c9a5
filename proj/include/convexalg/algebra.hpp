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
#include <functional>
#include <string>
#include <vector>

#include "convexalg/errors.hpp"
#include "convexalg/finsupp.hpp"

namespace convexalg {

/// An algebra for the free semimodule monad with an explicit finite carrier.
/// The free carrier over a basis is not represented this way: there the
/// structure map is `mult` and the convex-set layer works on generators
/// directly.
template <Semiring S, std::totally_ordered E>
struct FiniteAlgebra {
  std::vector<E> carrier;  // sorted, duplicate-free
  std::function<E(const FinSupp<S, E>&)> structure;

  bool in_carrier(const E& x) const {
    return std::binary_search(carrier.begin(), carrier.end(), x);
  }
};

/// Applies the structure map; the support must lie inside the carrier.
template <Semiring S, class E>
E eval_in_algebra(const FiniteAlgebra<S, E>& a, const FinSupp<S, E>& phi) {
  for (const auto& [k, v] : phi.entries()) {
    if (!a.in_carrier(k)) {
      throw PreconditionError("support element outside the algebra carrier");
    }
  }
  return a.structure(phi);
}

/// The semimodule operations carried by an algebra:
///   x + y = a(x -> 1, y -> 1),   0 = a(empty),   lambda * x = a(x -> lambda).
template <Semiring S, class E>
struct SemimoduleOps {
  std::function<E(const E&, const E&)> add;
  E zero;
  std::function<E(const typename S::value_type&, const E&)> scale;
};

template <Semiring S, class E>
SemimoduleOps<S, E> semimodule_from_algebra(const FiniteAlgebra<S, E>& a) {
  SemimoduleOps<S, E> ops;
  ops.add = [a](const E& x, const E& y) {
    return a.structure(add(FinSupp<S, E>::unit(x), FinSupp<S, E>::unit(y)));
  };
  ops.zero = a.structure(FinSupp<S, E>::zero());
  ops.scale = [a](const typename S::value_type& lambda, const E& x) {
    return a.structure(scale(lambda, FinSupp<S, E>::unit(x)));
  };
  return ops;
}

/// Evaluates a finitely supported function through the semimodule operations
/// as the sum of scaled carrier elements.  Agrees with the structure map on
/// lawful algebras.
template <Semiring S, class E>
E eval_via_semimodule(const SemimoduleOps<S, E>& ops,
                      const FinSupp<S, E>& phi) {
  bool first = true;
  E acc = ops.zero;
  for (const auto& [k, v] : phi.entries()) {
    E term = ops.scale(v, k);
    acc = first ? term : ops.add(acc, term);
    first = false;
  }
  return acc;
}

/// Join-semilattice algebra over the boolean instance: the structure map
/// takes the join of the selected elements, bottom on empty input.
template <std::totally_ordered E>
FiniteAlgebra<BoolSemiring, E> make_join_algebra(
    std::vector<E> carrier, E bottom, std::function<E(const E&, const E&)> join) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  FiniteAlgebra<BoolSemiring, E> a;
  a.carrier = std::move(carrier);
  a.structure = [bottom, join](const FinSupp<BoolSemiring, E>& phi) -> E {
    E acc = bottom;
    bool first = true;
    for (const auto& [k, v] : phi.entries()) {
      acc = first ? k : join(acc, k);
      first = false;
    }
    return acc;
  };
  return a;
}

/// Checks the unit and multiplication laws of the structure map.  Boolean
/// algebras with small carriers are checked exhaustively; other instances on
/// `samples` random inputs.  Returns the violations found.
template <Semiring S, class E>
std::vector<std::string> validate_algebra(const FiniteAlgebra<S, E>& a,
                                          int samples = 100,
                                          std::uint64_t seed = default_seed) {
  std::vector<std::string> report;

  for (const E& x : a.carrier) {
    if (!(a.structure(FinSupp<S, E>::unit(x)) == x)) {
      report.push_back("structure map does not fix a Dirac function");
    }
  }

  auto check_nested = [&](const FinSupp<S, FinSupp<S, E>>& nested) {
    E lhs = a.structure(map_along(
        [&](const FinSupp<S, E>& inner) { return a.structure(inner); },
        nested));
    E rhs = a.structure(mult(nested));
    if (!(lhs == rhs)) {
      report.push_back("structure map does not commute with flattening");
    }
  };

  if constexpr (S::enumerable && S::id == SemiringId::boolean) {
    if (a.carrier.size() <= 4) {
      // All boolean vectors over the carrier, then all vectors over those.
      std::vector<FinSupp<S, E>> inners;
      std::size_t n = a.carrier.size();
      for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        std::vector<typename FinSupp<S, E>::entry_type> es;
        for (std::size_t i = 0; i < n; ++i)
          if ((m >> i) & 1) es.emplace_back(a.carrier[i], true);
        inners.push_back(FinSupp<S, E>(std::move(es)));
      }
      for (std::size_t m = 0; m < (std::size_t{1} << inners.size()); ++m) {
        std::vector<typename FinSupp<S, FinSupp<S, E>>::entry_type> es;
        for (std::size_t i = 0; i < inners.size(); ++i)
          if ((m >> i) & 1) es.emplace_back(inners[i], true);
        check_nested(FinSupp<S, FinSupp<S, E>>(std::move(es)));
      }
      return report;
    }
  }

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<typename FinSupp<S, FinSupp<S, E>>::entry_type> outer;
    std::size_t outer_size = rng.below(3);
    for (std::size_t i = 0; i < outer_size; ++i) {
      std::vector<typename FinSupp<S, E>::entry_type> inner;
      std::size_t inner_size = rng.below(3);
      for (std::size_t j = 0; j < inner_size; ++j) {
        inner.emplace_back(a.carrier[rng.below(a.carrier.size())],
                           S::sample(rng));
      }
      outer.emplace_back(FinSupp<S, E>(std::move(inner)), S::sample(rng));
    }
    check_nested(FinSupp<S, FinSupp<S, E>>(std::move(outer)));
  }
  return report;
}

}  // namespace convexalg
