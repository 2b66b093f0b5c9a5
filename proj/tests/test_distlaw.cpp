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

#include <catch2/catch.hpp>

#include <algorithm>
#include <map>

#include "convexalg/distlaw.hpp"
#include "convexalg/random_values.hpp"
#include "oracles.hpp"

using namespace convexalg;

namespace {

using FQ = FinSupp<QPlusSemiring>;
using FB = FinSupp<BoolSemiring>;
using FN = FinSupp<NatSemiring>;

FQ vec(std::vector<std::pair<BasisElement, Rational>> entries) {
  return FQ(std::move(entries));
}

template <Semiring S>
WeightedFamily<S> family(
    std::vector<std::pair<std::vector<BasisElement>, typename S::value_type>>
        entries) {
  std::vector<typename WeightedFamily<S>::entry_type> converted;
  for (auto& [ids, w] : entries) {
    converted.emplace_back(std::set<BasisElement>(ids.begin(), ids.end()), w);
  }
  return WeightedFamily<S>(std::move(converted));
}

}  // namespace

TEST_CASE("choice set of the two-set rational family") {
  auto fam = family<QPlusSemiring>({{{"x", "y"}, Rational(1)},
                                    {{"y", "z"}, Rational(2)}});
  auto cs = choice_set(fam);
  std::vector<FQ> expected{
      vec({{"x", Rational(1)}, {"y", Rational(2)}}),
      vec({{"x", Rational(1)}, {"z", Rational(2)}}),
      vec({{"y", Rational(1)}, {"z", Rational(2)}}),
      vec({{"y", Rational(3)}}),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(cs == expected);
}

TEST_CASE("choice set edge cases") {
  CHECK(choice_set(WeightedFamily<QPlusSemiring>::zero()) ==
        std::vector<FQ>{FQ::zero()});
  CHECK(choice_set(family<QPlusSemiring>({{{}, Rational(1)}})).empty());
  // The cap guards the product of member sizes.
  auto fam = family<QPlusSemiring>({{{"x", "y"}, Rational(1)},
                                    {{"y", "z"}, Rational(2)}});
  CHECK_THROWS_AS(choice_set(fam, 3), ResourceLimitError);
}

TEST_CASE("the law reproduces the worked three-set example") {
  Basis basis{"x", "y", "z", "a", "b"};
  auto fam = family<QPlusSemiring>({{{"x", "y"}, Rational(5)},
                                    {{"y", "z"}, Rational(9)},
                                    {{"a", "b"}, Rational(13)}});
  auto d = delta(fam, basis);
  CHECK(d.is_canonical());
  FQ member = vec({{"x", Rational(2)},
                   {"y", Rational(7)},
                   {"z", Rational(5)},
                   {"a", Rational(6)},
                   {"b", Rational(7)}});
  CHECK(hull_membership(member, d));

  // Over the naturals the same vector is not a choice-function image.
  auto nat_fam = family<NatSemiring>({{{"x", "y"}, std::uint64_t{5}},
                                      {{"y", "z"}, std::uint64_t{9}},
                                      {{"a", "b"}, std::uint64_t{13}}});
  FN nat_member({{"x", std::uint64_t{2}},
                 {"y", std::uint64_t{7}},
                 {"z", std::uint64_t{5}},
                 {"a", std::uint64_t{6}},
                 {"b", std::uint64_t{7}}});
  auto nat_choices = choice_set(nat_fam);
  CHECK(std::find(nat_choices.begin(), nat_choices.end(), nat_member) ==
        nat_choices.end());
}

TEST_CASE("the law refuses non-semifield instances") {
  auto nat_fam = family<NatSemiring>({{{"x"}, std::uint64_t{1}}});
  CHECK_THROWS_AS(delta(nat_fam, Basis{"x"}), UnsupportedError);
}

TEST_CASE("the nat vector is reachable through a two-variable weighting") {
  // Bounded scan: weightings assign one composition of the set weight per
  // supported set; the displayed vector arises from 2+3, 4+5, 6+7.
  const std::vector<std::vector<BasisElement>> sets{
      {"x", "y"}, {"y", "z"}, {"a", "b"}};
  const std::vector<std::uint64_t> weights{5, 9, 13};

  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> splits(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::uint64_t first = 0; first <= weights[i]; ++first) {
      splits[i].emplace_back(first, weights[i] - first);
    }
  }

  FN target({{"x", std::uint64_t{2}},
             {"y", std::uint64_t{7}},
             {"z", std::uint64_t{5}},
             {"a", std::uint64_t{6}},
             {"b", std::uint64_t{7}}});
  bool found = false;
  for (const auto& [s0a, s0b] : splits[0]) {
    for (const auto& [s1a, s1b] : splits[1]) {
      for (const auto& [s2a, s2b] : splits[2]) {
        FN candidate({{"x", s0a},
                      {"y", s0b},
                      {"y", s1a},
                      {"z", s1b},
                      {"a", s2a},
                      {"b", s2b}});
        if (candidate == target) found = true;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("direct enumeration matches the dirac description") {
  Basis basis{"x", "y"};
  auto dirac = family<BoolSemiring>({{{"x", "y"}, true}});
  auto members = delta_enumerate(dirac, basis);
  std::vector<FB> expected{FB({{"x", true}}), FB({{"x", true}, {"y", true}}),
                           FB({{"y", true}})};
  std::sort(expected.begin(), expected.end());
  CHECK(members == expected);

  CHECK(delta_enumerate(WeightedFamily<BoolSemiring>::zero(), basis) ==
        std::vector<FB>{FB::zero()});
  CHECK(delta_enumerate(family<BoolSemiring>({{{}, true}}), basis).empty());
}

TEST_CASE("direct enumeration limits") {
  Basis big{"a", "b", "c", "d"};
  CHECK_THROWS_AS(
      delta_enumerate(WeightedFamily<BoolSemiring>::zero(), big),
      ResourceLimitError);
  auto stray = family<BoolSemiring>({{{"q"}, true}});
  CHECK_THROWS_AS(delta_enumerate(stray, Basis{"x"}), PreconditionError);
}

TEST_CASE("direct enumeration agrees with the full weighting scan") {
  for (int n = 0; n <= 3; ++n) {
    Basis basis = detail::numbered_basis("x", n);
    for (const auto& fam : detail::all_bool_families(basis)) {
      CHECK(delta_enumerate(fam, basis) ==
            oracles::delta_psi_bruteforce(fam, basis));
    }
  }
}

TEST_CASE("choice images are always reachable through weightings") {
  Basis basis{"x", "y"};
  for (const auto& fam : detail::all_bool_families(basis)) {
    auto direct = delta_enumerate(fam, basis);
    for (const auto& phi : choice_set(fam)) {
      CHECK(std::binary_search(direct.begin(), direct.end(), phi));
    }
  }
}

TEST_CASE("weak-law certification at tiny sizes") {
  for (int n = 0; n <= 1; ++n) {
    auto report = check_weak_law(n);
    for (const auto& c : report.cases) {
      INFO(c.name << " " << c.witness);
      CHECK(c.pass);
    }
  }
  CHECK_THROWS_AS(check_weak_law(4), ResourceLimitError);
}

TEST_CASE("span and enumeration agree exhaustively at size two") {
  auto report = check_thm2_equivalence(2);
  REQUIRE(report.cases.size() == 1);
  CHECK(report.cases.front().pass);
  CHECK(report.cases.front().name == "exhaustive_families(16)");
}

TEST_CASE("the law is natural over the rationals") {
  Rng rng(314);
  Basis src{"x", "y", "z"};
  Basis dst{"u", "v"};
  std::map<BasisElement, BasisElement> f{{"x", "u"}, {"y", "v"}, {"z", "u"}};
  for (int i = 0; i < 60; ++i) {
    auto fam = random_weighted_family<QPlusSemiring>(src, rng);
    auto pushed = map_along(
        [&](const std::set<BasisElement>& member) {
          std::set<BasisElement> image;
          for (const auto& k : member) image.insert(f.at(k));
          return image;
        },
        fam);
    auto lhs = delta(pushed, dst);
    auto source_value = delta(fam, src);
    std::vector<FQ> mapped;
    for (const auto& g : source_value.generators()) {
      mapped.push_back(map_along(f, g));
    }
    auto rhs = canonicalize(ConvexSet<QPlusSemiring>(dst, mapped));
    CHECK(equal(lhs, rhs));
  }
}
