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

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "convexalg/convexset.hpp"
#include "convexalg/enumerate.hpp"
#include "convexalg/errors.hpp"
#include "convexalg/finsupp.hpp"
#include "convexalg/report.hpp"
#include "convexalg/rng.hpp"
#include "convexalg/text.hpp"

namespace convexalg {

/// A finitely supported weighting of finite sets of basis elements.
template <Semiring S, std::totally_ordered K = BasisElement>
using WeightedFamily = FinSupp<S, std::set<K>>;

inline constexpr std::size_t default_choice_cap = std::size_t{1} << 20;

/// The pushforwards of a weighted family along every choice function that
/// picks one element from each supported set.  An empty supported set leaves
/// no choice function at all, so the result is empty; an empty support
/// leaves exactly the trivial choice function, whose pushforward is the zero
/// vector.
template <Semiring S, class K>
std::vector<FinSupp<S, K>> choice_set(
    const WeightedFamily<S, K>& family,
    std::size_t max_choices = default_choice_cap) {
  std::vector<std::vector<K>> pools;
  std::vector<typename S::value_type> weights;
  std::size_t count = 1;
  for (const auto& [member, w] : family.entries()) {
    if (member.empty()) return {};
    pools.emplace_back(member.begin(), member.end());
    weights.push_back(w);
    if (count > max_choices / member.size()) {
      throw ResourceLimitError("too many choice functions");
    }
    count *= member.size();
  }

  std::set<FinSupp<S, K>> out;
  std::vector<std::size_t> pick(pools.size(), 0);
  for (;;) {
    std::vector<typename FinSupp<S, K>::entry_type> entries;
    entries.reserve(pools.size());
    for (std::size_t i = 0; i < pools.size(); ++i) {
      entries.emplace_back(pools[i][pick[i]], weights[i]);
    }
    out.insert(FinSupp<S, K>(std::move(entries)));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < pools[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return {out.begin(), out.end()};
}

/// The weak law sending a weighted family to the convex set spanned by its
/// choice-function pushforwards.  Defined on semifield instances; over the
/// naturals that characterisation fails, so the call is refused.
template <Semiring S, class K>
ConvexSet<S, K> delta(const WeightedFamily<S, K>& family, std::set<K> basis,
                      std::size_t max_choices = default_choice_cap) {
  if constexpr (!S::semifield) {
    throw UnsupportedError(std::string(S::name) +
                           ": the convex-span characterisation needs a "
                           "semifield");
  } else {
    return canonicalize(
        ConvexSet<S, K>(std::move(basis), choice_set(family, max_choices)));
  }
}

/// The law in its direct form over the boolean instance: all vectors
/// obtained from a two-variable weighting psi of (set, member) pairs whose
/// per-set sums reproduce the family.  Positivity pins psi to zero outside
/// the supported sets, so the scan ranges over one nonempty subset per
/// supported set and unions them; partial results are merged setwise, which
/// keeps the scan small.  The `max_basis_size` cap guards the declared
/// basis.
template <Semiring S, class K>
std::vector<FinSupp<S, K>> delta_enumerate(const WeightedFamily<S, K>& family,
                                           const std::set<K>& basis,
                                           std::size_t max_basis_size = 3) {
  if constexpr (S::id != SemiringId::boolean) {
    throw UnsupportedError("direct enumeration requires the boolean instance");
  } else {
    if (basis.size() > max_basis_size) {
      throw ResourceLimitError("basis too large for direct enumeration");
    }
    for (const auto& [member, w] : family.entries()) {
      for (const K& k : member) {
        if (!basis.contains(k)) {
          throw PreconditionError("family member escapes the declared basis");
        }
      }
    }

    std::set<FinSupp<S, K>> results;
    results.insert(FinSupp<S, K>::zero());
    for (const auto& [member, w] : family.entries()) {
      if (member.empty()) return {};
      std::vector<K> items(member.begin(), member.end());
      std::set<FinSupp<S, K>> next;
      for (const auto& partial : results) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << items.size());
             ++mask) {
          std::vector<typename FinSupp<S, K>::entry_type> entries;
          for (std::size_t i = 0; i < items.size(); ++i) {
            if ((mask >> i) & 1) entries.emplace_back(items[i], true);
          }
          next.insert(add(partial, FinSupp<S, K>(std::move(entries))));
        }
      }
      results = std::move(next);
    }
    return {results.begin(), results.end()};
  }
}

/// Exhaustively certifies the defining diagrams of the law over the boolean
/// instance on a small basis: both multiplication pentagons, the unit
/// triangle of the powerset monad, and every naturality square.  The unit
/// triangle of the semimodule monad is expected to fail from basis size two
/// on; the report carries the witness.  Basis sizes up to two are covered in
/// full; at size three the pentagon inputs are enumerated with a support cap
/// of two.
inline Report check_weak_law(int basis_size) {
  using B = BoolSemiring;
  using K = BasisElement;
  if (basis_size < 0 || basis_size > 3) {
    throw ResourceLimitError("weak-law certification supports basis sizes 0-3");
  }

  Report report;
  report.suite = "weak-law";
  std::set<K> basis = detail::numbered_basis("x", basis_size);
  const std::size_t inner_cap = 64;  // inner law components live over larger
                                     // key spaces than the declared basis
  const std::size_t outer_support_cap =
      basis_size <= 2 ? std::size_t(-1) : 2;

  std::vector<FinSupp<B, K>> vectors = detail::all_bool_vectors(basis);
  std::vector<WeightedFamily<B, K>> families =
      detail::all_bool_families(basis);

  auto as_set = [](const std::vector<FinSupp<B, K>>& v) {
    return std::set<FinSupp<B, K>>(v.begin(), v.end());
  };

  // Multiplication pentagon of the semimodule monad:
  // delta after flattening equals flatten-the-images after both deltas.
  {
    std::string witness;
    std::set<FinSupp<B, K>> vector_basis(vectors.begin(), vectors.end());
    std::size_t cap =
        outer_support_cap == std::size_t(-1) ? families.size()
                                             : outer_support_cap;
    bool pass = detail::for_each_bool_vector(
        families, cap, [&](const FinSupp<B, WeightedFamily<B, K>>& theta) {
          auto left = as_set(delta_enumerate(mult(theta), basis, inner_cap));
          auto pushed = map_along(
              [&](const WeightedFamily<B, K>& f) {
                auto d = delta_enumerate(f, basis, inner_cap);
                return std::set<FinSupp<B, K>>(d.begin(), d.end());
              },
              theta);
          std::set<FinSupp<B, K>> right;
          for (const auto& psi :
               delta_enumerate(pushed, vector_basis, inner_cap)) {
            right.insert(mult(psi));
          }
          if (left != right) {
            witness = "input " + text(theta);
            return false;
          }
          return true;
        });
    report.add("mu_semimodule_pentagon", pass, witness);
  }

  // Multiplication pentagon of the powerset monad:
  // delta after union equals the union of iterated deltas.
  {
    std::string witness;
    std::vector<K> items(basis.begin(), basis.end());
    std::vector<std::set<K>> sets = detail::subsets_of(items);
    std::set<std::set<K>> set_basis(sets.begin(), sets.end());
    std::vector<std::set<std::set<K>>> set_families;
    for (const auto& u : detail::subsets_of(sets)) {
      if (basis_size <= 2 || u.size() <= 2) set_families.push_back(u);
    }
    std::size_t cap = outer_support_cap == std::size_t(-1)
                          ? set_families.size()
                          : outer_support_cap;
    bool pass = detail::for_each_bool_vector(
        set_families, cap, [&](const WeightedFamily<B, std::set<K>>& theta) {
          auto flattened = map_along(
              [](const std::set<std::set<K>>& u) {
                std::set<K> merged;
                for (const auto& s : u) merged.insert(s.begin(), s.end());
                return merged;
              },
              theta);
          auto left = as_set(delta_enumerate(flattened, basis, inner_cap));
          std::set<FinSupp<B, K>> right;
          for (const auto& psi :
               delta_enumerate(theta, set_basis, inner_cap)) {
            for (const auto& phi : delta_enumerate(psi, basis, inner_cap)) {
              right.insert(phi);
            }
          }
          if (left != right) {
            witness = "input " + text(theta);
            return false;
          }
          return true;
        });
    report.add("mu_powerset_pentagon", pass, witness);
  }

  // Unit triangle of the powerset monad: a vector whose entries are wrapped
  // into singleton sets comes back as exactly itself.
  {
    bool pass = true;
    std::string witness;
    for (const auto& phi : vectors) {
      auto wrapped = map_along([](const K& k) { return std::set<K>{k}; }, phi);
      auto image = delta_enumerate(wrapped, basis, inner_cap);
      if (!(image.size() == 1 && image.front() == phi)) {
        pass = false;
        witness = "input " + text(phi);
        break;
      }
    }
    report.add("eta_powerset_triangle", pass, witness);
  }

  // Naturality squares for every function between bases of bounded size.
  {
    bool pass = true;
    std::string witness;
    for (int n1 = 0; n1 <= basis_size && pass; ++n1) {
      for (int n2 = 0; n2 <= basis_size && pass; ++n2) {
        if (n1 > 0 && n2 == 0) continue;  // no functions exist
        std::set<K> src = detail::numbered_basis("x", n1);
        std::set<K> dst = detail::numbered_basis("y", n2);
        std::vector<K> src_items(src.begin(), src.end());
        std::vector<K> dst_items(dst.begin(), dst.end());
        auto src_families = detail::all_bool_families(src);
        std::vector<std::size_t> pick(src_items.size(), 0);
        for (;;) {
          std::map<K, K> f;
          for (std::size_t i = 0; i < src_items.size(); ++i) {
            f[src_items[i]] = dst_items[pick[i]];
          }
          for (const auto& family : src_families) {
            auto pushed_family = map_along(
                [&](const std::set<K>& member) {
                  std::set<K> image;
                  for (const K& k : member) image.insert(f.at(k));
                  return image;
                },
                family);
            auto lhs = as_set(delta_enumerate(pushed_family, dst, inner_cap));
            std::set<FinSupp<B, K>> rhs;
            for (const auto& phi : delta_enumerate(family, src, inner_cap)) {
              rhs.insert(map_along(f, phi));
            }
            if (lhs != rhs) {
              pass = false;
              witness = "input " + text(family);
              break;
            }
          }
          if (!pass) break;
          std::size_t i = 0;
          for (; i < pick.size(); ++i) {
            if (++pick[i] < dst_items.size()) break;
            pick[i] = 0;
          }
          if (i == pick.size()) break;
        }
      }
    }
    report.add("naturality_squares", pass, witness);
  }

  // Unit triangle of the semimodule monad: this is the diagram the weak law
  // drops, and from basis size two on it genuinely fails, because the
  // two-element semiring decomposes its unit as 1 + 1 = 1.
  {
    std::string witness;
    std::vector<K> items(basis.begin(), basis.end());
    for (const auto& a : detail::subsets_of(items)) {
      WeightedFamily<B, K> dirac = WeightedFamily<B, K>::unit(a);
      auto through_law = as_set(delta_enumerate(dirac, basis, inner_cap));
      std::set<FinSupp<B, K>> direct;
      for (const K& k : a) direct.insert(FinSupp<B, K>::unit(k));
      if (through_law != direct) {
        witness = "set " + text(a);
        break;
      }
    }
    bool expected_witness = basis_size >= 2;
    report.add("eta_semimodule_triangle_fails",
               expected_witness == !witness.empty(), witness);
  }

  return report;
}

/// Certifies, over the boolean instance, that the convex-span presentation
/// of the law and its direct enumeration agree: exhaustively over all
/// families for basis sizes up to two, on seeded samples at size three.
inline Report check_thm2_equivalence(int basis_size, int samples = 500,
                                     std::uint64_t seed = default_seed) {
  using B = BoolSemiring;
  using K = BasisElement;
  if (basis_size < 0 || basis_size > 3) {
    throw ResourceLimitError("equivalence check supports basis sizes 0-3");
  }

  Report report;
  report.suite = "thm2";
  report.seed = seed;
  std::set<K> basis = detail::numbered_basis("x", basis_size);
  std::vector<K> items(basis.begin(), basis.end());
  std::vector<std::set<K>> member_pool = detail::subsets_of(items);

  auto agree = [&](const WeightedFamily<B, K>& family) {
    auto spanned = delta(family, basis);
    auto listed = saturate(spanned);
    auto direct = delta_enumerate(family, basis);
    return std::set<FinSupp<B, K>>(listed.begin(), listed.end()) ==
           std::set<FinSupp<B, K>>(direct.begin(), direct.end());
  };

  if (basis_size <= 2) {
    bool pass = true;
    std::string witness;
    std::size_t count = 0;
    for (const auto& family : detail::all_bool_families(basis)) {
      ++count;
      if (!agree(family)) {
        pass = false;
        witness = "family " + text(family);
        break;
      }
    }
    report.add("exhaustive_families(" + std::to_string(count) + ")", pass,
               witness);
  } else {
    bool pass = true;
    std::string witness;
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
      std::size_t mask = rng.below(std::size_t{1} << member_pool.size());
      std::vector<typename WeightedFamily<B, K>::entry_type> entries;
      for (std::size_t i = 0; i < member_pool.size(); ++i) {
        if ((mask >> i) & 1) entries.emplace_back(member_pool[i], true);
      }
      WeightedFamily<B, K> family(std::move(entries));
      if (!agree(family)) {
        pass = false;
        witness = "family " + text(family);
        break;
      }
    }
    report.add("sampled_families(" + std::to_string(samples) + ")", pass,
               witness);
  }
  return report;
}

}  // namespace convexalg
