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

#include <set>
#include <vector>

#include "convexalg/convexset.hpp"
#include "convexalg/distlaw.hpp"
#include "convexalg/finsupp.hpp"
#include "convexalg/rng.hpp"

namespace convexalg {

/// Seeded generators for sampled law suites.

template <Semiring S>
typename S::value_type sample_nonzero(Rng& rng) {
  for (;;) {
    typename S::value_type v = S::sample(rng);
    if (!(v == S::zero())) return v;
  }
}

template <Semiring S>
FinSupp<S> random_finsupp(const Basis& basis, Rng& rng,
                          std::size_t max_support = 3) {
  std::vector<BasisElement> items(basis.begin(), basis.end());
  std::size_t size = rng.below(std::min(max_support, items.size()) + 1);
  std::vector<typename FinSupp<S>::entry_type> entries;
  for (std::size_t i = 0; i < size; ++i) {
    entries.emplace_back(items[rng.below(items.size())], S::sample(rng));
  }
  return FinSupp<S>(std::move(entries));
}

template <Semiring S>
ConvexSet<S> random_convex_set(const Basis& basis, Rng& rng,
                               std::size_t max_generators = 3,
                               bool allow_empty = true) {
  std::size_t count = rng.below(max_generators + 1);
  if (!allow_empty && count == 0) count = 1;
  std::vector<FinSupp<S>> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    gens.push_back(random_finsupp<S>(basis, rng));
  }
  return canonicalize(ConvexSet<S>(basis, std::move(gens)));
}

template <Semiring S>
WeightedFamily<S> random_weighted_family(const Basis& basis, Rng& rng,
                                         std::size_t max_members = 3,
                                         std::size_t max_member_size = 3) {
  std::vector<BasisElement> items(basis.begin(), basis.end());
  std::size_t members = rng.below(max_members + 1);
  std::vector<typename WeightedFamily<S>::entry_type> entries;
  for (std::size_t i = 0; i < members; ++i) {
    std::set<BasisElement> member;
    std::size_t size = rng.below(std::min(max_member_size, items.size()) + 1);
    for (std::size_t j = 0; j < size; ++j) {
      member.insert(items[rng.below(items.size())]);
    }
    entries.emplace_back(std::move(member), sample_nonzero<S>(rng));
  }
  return WeightedFamily<S>(std::move(entries));
}

}  // namespace convexalg
