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
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "convexalg/errors.hpp"
#include "convexalg/semiring.hpp"

namespace convexalg {

/// Finitely supported function from a key set into a semiring.  Entries are
/// kept in key order with zero values pruned eagerly, so structural equality
/// coincides with equality of functions.  The key type is generic: nested
/// FinSupp values, finite sets, and convex sets all serve as keys in the
/// constructions built on top of this type.
template <Semiring S, std::totally_ordered K = BasisElement>
class FinSupp {
 public:
  using semiring = S;
  using key_type = K;
  using value_type = typename S::value_type;
  using entry_type = std::pair<K, value_type>;

  FinSupp() = default;

  /// Builds from a list of entries; duplicate keys are summed, zero values
  /// dropped.
  explicit FinSupp(std::vector<entry_type> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const entry_type& a, const entry_type& b) {
                return a.first < b.first;
              });
    for (auto& [k, v] : raw) {
      if (!entries_.empty() && entries_.back().first == k) {
        entries_.back().second = S::add(entries_.back().second, v);
      } else {
        entries_.emplace_back(std::move(k), std::move(v));
      }
    }
    prune();
  }

  /// The Dirac function centred at x.
  static FinSupp unit(K x) {
    FinSupp f;
    f.entries_.emplace_back(std::move(x), S::one());
    return f;
  }

  /// The zero vector (empty support).
  static FinSupp zero() { return FinSupp(); }

  const std::vector<entry_type>& entries() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  std::vector<K> support() const {
    std::vector<K> keys;
    keys.reserve(entries_.size());
    for (const auto& [k, v] : entries_) keys.push_back(k);
    return keys;
  }

  /// Value at a key; zero outside the support.
  value_type at(const K& key) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const entry_type& e, const K& k) {
                                 return e.first < k;
                               });
    if (it != entries_.end() && it->first == key) return it->second;
    return S::zero();
  }

  bool contains(const K& key) const { return !(at(key) == S::zero()); }

  /// Sum of all values.
  value_type total() const {
    value_type t = S::zero();
    for (const auto& [k, v] : entries_) t = S::add(t, v);
    return t;
  }

  friend bool operator==(const FinSupp& a, const FinSupp& b) = default;

  friend std::strong_ordering operator<=>(const FinSupp& a, const FinSupp& b) {
    std::size_t n = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.entries_[i].first < b.entries_[i].first)
        return std::strong_ordering::less;
      if (b.entries_[i].first < a.entries_[i].first)
        return std::strong_ordering::greater;
      if (a.entries_[i].second < b.entries_[i].second)
        return std::strong_ordering::less;
      if (b.entries_[i].second < a.entries_[i].second)
        return std::strong_ordering::greater;
    }
    return a.entries_.size() <=> b.entries_.size();
  }

 private:
  void prune() {
    std::erase_if(entries_,
                  [](const entry_type& e) { return e.second == S::zero(); });
  }

  std::vector<entry_type> entries_;
};

/// Pointwise sum.
template <Semiring S, class K>
FinSupp<S, K> add(const FinSupp<S, K>& f, const FinSupp<S, K>& g) {
  std::vector<typename FinSupp<S, K>::entry_type> out(f.entries());
  out.insert(out.end(), g.entries().begin(), g.entries().end());
  return FinSupp<S, K>(std::move(out));
}

/// Pointwise scalar multiple; scaling by zero yields the zero vector.
template <Semiring S, class K>
FinSupp<S, K> scale(const typename S::value_type& lambda,
                    const FinSupp<S, K>& f) {
  std::vector<typename FinSupp<S, K>::entry_type> out;
  out.reserve(f.entries().size());
  for (const auto& [k, v] : f.entries()) out.emplace_back(k, S::mul(lambda, v));
  return FinSupp<S, K>(std::move(out));
}

/// Pushforward along a key function: the value at y is the sum over the
/// preimage of y.
template <Semiring S, class K, class F>
  requires std::invocable<F, const K&>
auto map_along(F&& f, const FinSupp<S, K>& phi) {
  using K2 = std::decay_t<std::invoke_result_t<F, const K&>>;
  std::vector<typename FinSupp<S, K2>::entry_type> out;
  out.reserve(phi.entries().size());
  for (const auto& [k, v] : phi.entries()) out.emplace_back(f(k), v);
  return FinSupp<S, K2>(std::move(out));
}

/// Pushforward along an explicit finite function; the function must be total
/// on the support.
template <Semiring S, class K, class K2>
FinSupp<S, K2> map_along(const std::map<K, K2>& f, const FinSupp<S, K>& phi) {
  return map_along(
      [&f](const K& k) -> const K2& {
        auto it = f.find(k);
        if (it == f.end()) {
          throw UnmappedElementError("basis function undefined on a support "
                                     "element");
        }
        return it->second;
      },
      phi);
}

/// Weighted flattening: the monad multiplication.  The value at x is the sum
/// over inner functions phi of weight(phi) * phi(x).
template <Semiring S, class K>
FinSupp<S, K> mult(const FinSupp<S, FinSupp<S, K>>& psi) {
  FinSupp<S, K> out;
  for (const auto& [phi, w] : psi.entries()) {
    out = add(out, scale(w, phi));
  }
  return out;
}

}  // namespace convexalg
