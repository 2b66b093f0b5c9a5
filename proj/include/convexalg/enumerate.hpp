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
#include <string>
#include <vector>

#include "convexalg/convexset.hpp"
#include "convexalg/errors.hpp"
#include "convexalg/finsupp.hpp"

namespace convexalg {

namespace detail {

template <class T>
std::vector<std::set<T>> subsets_of(const std::vector<T>& items) {
  if (items.size() > 20) throw ResourceLimitError("subset space too large");
  std::vector<std::set<T>> out;
  out.reserve(std::size_t{1} << items.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
    std::set<T> s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1) s.insert(items[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Calls fn on every boolean weighting of the pool with support size at most
/// max_support, one at a time.  fn returns false to abort; the function
/// forwards that result.
template <class T, class Fn>
bool for_each_bool_vector(const std::vector<T>& pool, std::size_t max_support,
                          Fn&& fn) {
  using V = FinSupp<BoolSemiring, T>;
  std::vector<std::size_t> stack;
  auto emit = [&]() {
    std::vector<typename V::entry_type> entries;
    entries.reserve(stack.size());
    for (std::size_t i : stack) entries.emplace_back(pool[i], true);
    return fn(V(std::move(entries)));
  };
  if (!emit()) return false;
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (stack.size() == max_support) return true;
    for (std::size_t i = start; i < pool.size(); ++i) {
      stack.push_back(i);
      if (!emit()) return false;
      if (!self(self, i + 1)) return false;
      stack.pop_back();
    }
    return true;
  };
  return rec(rec, 0);
}

inline std::set<BasisElement> numbered_basis(const char* stem, int n) {
  std::set<BasisElement> basis;
  for (int i = 0; i < n; ++i) {
    basis.insert(std::string(stem) + std::to_string(i));
  }
  return basis;
}

/// All boolean vectors over a basis (as finitely supported functions).
template <class K>
std::vector<FinSupp<BoolSemiring, K>> all_bool_vectors(
    const std::set<K>& basis) {
  std::vector<K> items(basis.begin(), basis.end());
  std::vector<FinSupp<BoolSemiring, K>> out;
  for (const auto& s : subsets_of(items)) {
    std::vector<typename FinSupp<BoolSemiring, K>::entry_type> entries;
    for (const K& k : s) entries.emplace_back(k, true);
    out.push_back(FinSupp<BoolSemiring, K>(std::move(entries)));
  }
  return out;
}

/// All boolean weightings of finite sets of basis elements.
template <class K>
std::vector<FinSupp<BoolSemiring, std::set<K>>> all_bool_families(
    const std::set<K>& basis) {
  std::vector<K> items(basis.begin(), basis.end());
  std::vector<std::set<K>> member_pool = subsets_of(items);
  std::vector<FinSupp<BoolSemiring, std::set<K>>> out;
  for (const auto& chosen : subsets_of(member_pool)) {
    std::vector<typename FinSupp<BoolSemiring, std::set<K>>::entry_type>
        entries;
    for (const auto& member : chosen) entries.emplace_back(member, true);
    out.push_back(FinSupp<BoolSemiring, std::set<K>>(std::move(entries)));
  }
  return out;
}

}  // namespace detail

/// Every convex subset of the free boolean semimodule over the basis, in
/// canonical generator form.  The free carrier is finite there, so these can
/// be listed outright: a subset is convex exactly when it is closed under
/// binary joins.
template <std::totally_ordered K>
std::vector<ConvexSet<BoolSemiring, K>> all_bool_convex_sets(
    const std::set<K>& basis) {
  using B = BoolSemiring;
  std::vector<FinSupp<B, K>> vectors = detail::all_bool_vectors(basis);
  std::vector<ConvexSet<B, K>> out;
  for (const auto& subset : detail::subsets_of(vectors)) {
    std::vector<FinSupp<B, K>> elems(subset.begin(), subset.end());
    if (!elems.empty() && !is_convex_explicit(elems)) continue;
    out.push_back(canonicalize(ConvexSet<B, K>(basis, std::move(elems))));
  }
  return out;
}

}  // namespace convexalg
