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

#include "convexalg/semiring_checks.hpp"

using namespace convexalg;

namespace {

// Deliberately broken instance: addition constant at zero, so the additive
// unit law must be flagged.
struct BrokenBool : BoolSemiring {
  static value_type add(value_type, value_type) { return false; }
};

}  // namespace

TEST_CASE("axiom checker accepts the three instances") {
  CHECK(check_axioms<BoolSemiring>(1).empty());
  CHECK(check_axioms<QPlusSemiring>(1000).empty());
  CHECK(check_axioms<NatSemiring>(1000).empty());
  CHECK_THROWS_AS(check_axioms<BoolSemiring>(0), PreconditionError);
}

TEST_CASE("axiom checker names the violated law") {
  auto report = check_axioms<BrokenBool>(10);
  REQUIRE_FALSE(report.empty());
  bool mentions_unit = false;
  for (const auto& line : report) {
    if (line.find("additive unit") != std::string::npos) mentions_unit = true;
  }
  CHECK(mentions_unit);
}

TEST_CASE("property verdicts match the instance table") {
  using PV = PropertyVerdict::Kind;

  auto bool_pos = check_property<BoolSemiring>(SemiringProperty::positive, 10);
  CHECK(bool_pos.kind == PV::holds_exhaustive);

  auto nat_a = check_property<NatSemiring>(SemiringProperty::prop_a, 100);
  CHECK(nat_a.kind == PV::holds_sampled);

  auto bool_a = check_property<BoolSemiring>(SemiringProperty::prop_a, 10);
  REQUIRE(bool_a.kind == PV::fails);
  CHECK(bool_a.witness == std::vector<std::string>{"1", "1"});

  auto nat_semifield =
      check_property<NatSemiring>(SemiringProperty::semifield, 100);
  REQUIRE(nat_semifield.kind == PV::fails);
  CHECK(nat_semifield.witness == std::vector<std::string>{"2"});

  auto rat_a = check_property<QPlusSemiring>(SemiringProperty::prop_a, 100);
  CHECK(rat_a.kind == PV::fails);

  CHECK(check_property<BoolSemiring>(SemiringProperty::semifield, 10).holds());
  CHECK(check_property<BoolSemiring>(SemiringProperty::refinable, 10).holds());
  CHECK(check_property<BoolSemiring>(SemiringProperty::prop_b, 10).holds());
  CHECK(check_property<BoolSemiring>(SemiringProperty::prop_c, 10).kind ==
        PV::fails);
  CHECK(check_property<BoolSemiring>(SemiringProperty::prop_d, 10).holds());
  CHECK(check_property<BoolSemiring>(SemiringProperty::prop_e, 10).kind ==
        PV::holds_exhaustive);

  CHECK(check_property<QPlusSemiring>(SemiringProperty::semifield, 200)
            .holds());
  CHECK(check_property<QPlusSemiring>(SemiringProperty::refinable, 60)
            .holds());
  CHECK(check_property<QPlusSemiring>(SemiringProperty::prop_c, 60).holds());
  CHECK(check_property<NatSemiring>(SemiringProperty::refinable, 30).holds());
  CHECK(check_property<NatSemiring>(SemiringProperty::prop_d, 60).holds());

  CHECK_THROWS_AS(check_property<QPlusSemiring>(SemiringProperty::prop_e, 10),
                  UnsupportedError);
  CHECK_THROWS_AS(check_property<NatSemiring>(SemiringProperty::prop_e, 10),
                  UnsupportedError);
}

TEST_CASE("verdicts on enumerable instances ignore the seed") {
  for (auto prop :
       {SemiringProperty::positive, SemiringProperty::prop_a,
        SemiringProperty::prop_c, SemiringProperty::prop_e}) {
    auto a = check_property<BoolSemiring>(prop, 10, 1);
    auto b = check_property<BoolSemiring>(prop, 10, 999);
    CHECK(a.kind == b.kind);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("refinement witnesses satisfy the four equations") {
  SECTION("degenerate zero case") {
    auto w = refinement_witness<QPlusSemiring>(Rational(0), Rational(0),
                                               Rational(0), Rational(0));
    for (const auto& v : w) CHECK(v == Rational(0));
  }

  SECTION("worked rational example") {
    auto w = refinement_witness<QPlusSemiring>(Rational(2), Rational(1),
                                               Rational(3, 2), Rational(3, 2));
    CHECK(w[0] == Rational(1));
    CHECK(w[1] == Rational(1));
    CHECK(w[2] == Rational(1, 2));
    CHECK(w[3] == Rational(1, 2));
  }

  SECTION("boolean instance") {
    auto w = refinement_witness<BoolSemiring>(true, true, true, true);
    CHECK(w[0]);
    CHECK(w[1]);
    CHECK(w[2]);
    CHECK(w[3]);
    CHECK(BoolSemiring::add(w[0], w[1]) == true);
    CHECK(BoolSemiring::add(w[2], w[3]) == true);
    CHECK(BoolSemiring::add(w[0], w[2]) == true);
    CHECK(BoolSemiring::add(w[1], w[3]) == true);
  }

  SECTION("mismatched sums are rejected") {
    CHECK_THROWS_AS(refinement_witness<QPlusSemiring>(
                        Rational(1), Rational(1), Rational(3), Rational(0)),
                    PreconditionError);
  }

  SECTION("sampled quadruples") {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
      Rational a = QPlusSemiring::sample(rng);
      Rational b = QPlusSemiring::sample(rng);
      Rational total = a + b;
      Rational c = total * Rational(static_cast<std::int64_t>(rng.below(21)),
                                    20);
      Rational d = total - c;
      auto w = refinement_witness<QPlusSemiring>(a, b, c, d);
      CHECK(w[0] + w[1] == a);
      CHECK(w[2] + w[3] == b);
      CHECK(w[0] + w[2] == c);
      CHECK(w[1] + w[3] == d);
    }
  }
}

TEST_CASE("inverses") {
  CHECK(inverse<QPlusSemiring>(Rational(2, 3)) == Rational(3, 2));
  CHECK(inverse<BoolSemiring>(true) == true);
  CHECK_THROWS_AS(inverse<QPlusSemiring>(Rational(0)), DivisionByZeroError);
  CHECK_THROWS_AS(inverse<NatSemiring>(2), UnsupportedError);
}

TEST_CASE("carrier enumeration") {
  auto values = enumerate_values<BoolSemiring>();
  REQUIRE(values.size() == 2);
  CHECK(values[0] == false);
  CHECK(values[1] == true);
  CHECK_THROWS_AS(enumerate_values<QPlusSemiring>(), UnsupportedError);
  CHECK_THROWS_AS(enumerate_values<NatSemiring>(), UnsupportedError);
}

TEST_CASE("positivity holds on sampled pairs") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Rational a = QPlusSemiring::sample(rng);
    Rational b = QPlusSemiring::sample(rng);
    if ((a + b).is_zero()) {
      CHECK(a.is_zero());
      CHECK(b.is_zero());
    }
    auto na = NatSemiring::sample(rng);
    auto nb = NatSemiring::sample(rng);
    if (na + nb == 0) {
      CHECK(na == 0);
      CHECK(nb == 0);
    }
  }
}
