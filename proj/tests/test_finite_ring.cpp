/*
   Copyright 2026 The meadows authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <algorithm>
#include <set>

#include "meadows/finite_ring.hpp"
#include "meadows/ideal.hpp"
#include "meadows/ring_spec.hpp"

using namespace meadows;

namespace {

// independent modular-arithmetic oracles, no FiniteRing involved
std::set<Index> zn_units_oracle(unsigned n) {
  std::set<Index> out;
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      if ((x * y) % n == 1 % n) out.insert(x);
  return out;
}

std::set<Index> zn_idempotents_oracle(unsigned n) {
  std::set<Index> out;
  for (unsigned x = 0; x < n; ++x)
    if ((x * x) % n == x) out.insert(x);
  return out;
}

std::set<Index> as_set(const std::vector<Index>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("Z_n basics") {
  const auto z6 = make_zn(6);
  CHECK(z6->order() == 6);
  CHECK(z6->mul(2, 3) == 0);
  CHECK(z6->add(2, 3) == 5);
  CHECK(z6->neg(2) == 4);
  CHECK(z6->name() == "Z_6");
  CHECK(z6->descriptor() == "zn:6");
  CHECK(z6->element_name(5) == "5");

  const auto z1 = make_zn(1);
  CHECK(z1->is_zero_ring());
  CHECK(z1->zero() == z1->one());

  CHECK_THROWS_AS(make_zn(0), std::invalid_argument);
  CHECK_THROWS_AS(make_zn(5000), CapError);
  CHECK(make_zn(5000, 10000)->order() == 5000);
}

TEST_CASE("Z_4 units against the modular oracle") {
  const auto z4 = make_zn(4);
  const auto expected = zn_units_oracle(4);
  CHECK(expected == std::set<Index>{1, 3});  // frozen from the oracle
  CHECK(as_set(units(*z4)) == expected);
}

TEST_CASE("ring axioms hold on every construction in the corpus") {
  const std::vector<RingPtr> corpus = {
      make_zn(1),
      make_zn(6),
      make_zn(12),
      make_poly_quotient(2, {0, 0, 1}),
      make_poly_quotient(2, {1, 1, 1}),
      make_poly_quotient(3, {1, 0, 1}),
      make_product({make_zn(2), make_zn(4)}),
      make_group_algebra(make_zn(2), {2}),
      make_group_algebra(make_zn(3), {2, 2}),
  };
  for (const auto& r : corpus) {
    const auto report = validate_ring(*r);
    INFO(r->descriptor());
    CHECK(report.all_passed);
  }
}

TEST_CASE("polynomial quotient rings") {
  SUBCASE("F_2[x]/(x^2) has a square-zero generator") {
    const auto r = make_poly_quotient(2, {0, 0, 1});
    CHECK(r->order() == 4);
    const Index x = 2;  // coefficient vector (0, 1)
    CHECK(r->element_name(x) == "x");
    CHECK(r->mul(x, x) == r->zero());
  }
  SUBCASE("F_4 is a field") {
    const auto f4 = make_poly_quotient(2, {1, 1, 1});
    CHECK(f4->order() == 4);
    CHECK(units(*f4).size() == 3);  // every nonzero element
    // x * x = x + 1 in F_4
    CHECK(f4->mul(2, 2) == 3);
  }
  SUBCASE("degree-1 quotient collapses to the prime field") {
    const auto r = make_poly_quotient(3, {2, 1});  // x - 1
    CHECK(r->order() == 3);
    const auto iso = find_ring_isomorphism(r, make_zn(3));
    CHECK(iso.status == SearchStatus::Found);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(make_poly_quotient(4, {0, 1}), std::invalid_argument);  // p not prime
    CHECK_THROWS_AS(make_poly_quotient(3, {1, 2}), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(make_poly_quotient(3, {1}), std::invalid_argument);     // degree 0
    CHECK_THROWS_AS(make_poly_quotient(2, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}),
                    CapError);
  }
}

TEST_CASE("products") {
  const auto z2 = make_zn(2);
  const auto z3 = make_zn(3);

  SUBCASE("Z_2 x Z_3 is isomorphic to Z_6") {
    const auto p = make_product({z2, z3});
    CHECK(p->order() == 6);
    const auto iso = find_ring_isomorphism(p, make_zn(6));
    REQUIRE(iso.status == SearchStatus::Found);
    CHECK(iso.iso->is_surjective());
    CHECK(iso.iso->is_injective());
  }
  SUBCASE("a unary product is the factor itself") {
    CHECK(make_product({z2}).get() == z2.get());
  }
  SUBCASE("Z_2 x Z_2 idempotents") {
    const auto p = make_product({z2, z2});
    // e*e = e solved by brute force over the four pairs: every element
    CHECK(as_set(idempotents(*p)) == std::set<Index>{0, 1, 2, 3});
    CHECK(p->element_name(2) == "(1,0)");
  }
  SUBCASE("empty product is rejected") {
    CHECK_THROWS_AS(make_product({}), std::invalid_argument);
  }
}

TEST_CASE("group algebras") {
  SUBCASE("F_2[Z_2]: (1+g)^2 = 0 in characteristic 2") {
    const auto r = make_group_algebra(make_zn(2), {2});
    CHECK(r->order() == 4);
    const Index one_plus_g = 3;
    CHECK(r->element_name(one_plus_g) == "1+g");
    CHECK(r->mul(one_plus_g, one_plus_g) == r->zero());
  }
  SUBCASE("trivial group gives a copy of the base ring") {
    const auto r = make_group_algebra(make_zn(3), {1});
    CHECK(r->order() == 3);
    CHECK(find_ring_isomorphism(r, make_zn(3)).status == SearchStatus::Found);
  }
  SUBCASE("size cap") {
    CHECK_THROWS_AS(make_group_algebra(make_zn(5), {12}), CapError);
    CHECK(make_group_algebra(make_zn(5), {2, 2})->order() == 625);
  }
  SUBCASE("zero cyclic order is rejected") {
    CHECK_THROWS_AS(make_group_algebra(make_zn(2), {0}), std::invalid_argument);
  }
  SUBCASE("zero ring base is rejected") {
    CHECK_THROWS_AS(make_group_algebra(make_zn(1), {2}), std::invalid_argument);
  }
}

TEST_CASE("quotients") {
  const auto z6 = make_zn(6);

  SUBCASE("Z_6/(2) has two cosets") {
    auto [q, proj] = make_quotient(z6, principal_ideal(z6, 2));
    CHECK(q->order() == 2);  // |Z_6| / |{0,2,4}|
    CHECK(proj.is_surjective());
    // kernel is exactly the ideal
    std::set<Index> kernel;
    for (Index x = 0; x < 6; ++x)
      if (proj(x) == q->zero()) kernel.insert(x);
    CHECK(kernel == std::set<Index>{0, 2, 4});
    CHECK(find_ring_isomorphism(q, make_zn(2)).status == SearchStatus::Found);
  }
  SUBCASE("quotient by the zero ideal is the ring itself") {
    auto [q, proj] = make_quotient(z6, principal_ideal(z6, 0));
    CHECK(q.get() == z6.get());
    for (Index x = 0; x < 6; ++x) CHECK(proj(x) == x);
  }
  SUBCASE("quotient by the unit ideal is the zero ring") {
    auto [q, proj] = make_quotient(z6, principal_ideal(z6, 1));
    CHECK(q->is_zero_ring());
    CHECK(proj(5) == 0);
  }
  SUBCASE("ideal of a different ring is rejected") {
    const auto z4 = make_zn(4);
    CHECK_THROWS_AS(make_quotient(z6, principal_ideal(z4, 2)), std::invalid_argument);
  }
}

TEST_CASE("units, inverses, idempotents") {
  const auto z6 = make_zn(6);
  CHECK(as_set(units(*z6)) == zn_units_oracle(6));
  CHECK(zn_units_oracle(6) == std::set<Index>{1, 5});
  CHECK(unit_inverse(*z6, 5) == 5);
  CHECK_THROWS_AS(unit_inverse(*z6, 2), std::invalid_argument);

  const auto z1 = make_zn(1);
  CHECK(units(*z1) == std::vector<Index>{0});  // 0 = 1 there

  CHECK(as_set(idempotents(*z6)) == zn_idempotents_oracle(6));
  CHECK(zn_idempotents_oracle(6) == std::set<Index>{0, 1, 3, 4});
  CHECK(primitive_idempotents(*z6) == std::vector<Index>{3, 4});
  CHECK(z6->add(3, 4) == 1);  // they sum to one
  CHECK(z6->mul(3, 4) == 0);  // and are orthogonal

  const auto z4 = make_zn(4);
  CHECK(as_set(idempotents(*z4)) == zn_idempotents_oracle(4));
  CHECK(primitive_idempotents(*z4) == std::vector<Index>{1});

  const auto local = make_poly_quotient(2, {0, 0, 1});
  CHECK(as_set(idempotents(*local)) == std::set<Index>{0, 1});
}

TEST_CASE("primitive idempotents split the ring") {
  for (const auto& r : {make_zn(6), make_zn(12), make_product({make_zn(2), make_zn(2)})}) {
    const auto prim = primitive_idempotents(*r);
    Index sum = r->zero();
    for (Index e : prim) sum = r->add(sum, e);
    CHECK(sum == r->one());
    for (std::size_t i = 0; i < prim.size(); ++i)
      for (std::size_t j = i + 1; j < prim.size(); ++j)
        CHECK(r->mul(prim[i], prim[j]) == r->zero());

    std::vector<RingPtr> corners;
    for (Index e : prim) corners.push_back(corner_ring(r, e).first);
    const auto product = make_product(corners);
    CHECK(find_ring_isomorphism(product, r).status == SearchStatus::Found);
  }
}

TEST_CASE("corner rings") {
  const auto z6 = make_zn(6);
  SUBCASE("4Z_6 is a copy of Z_3") {
    auto [r, members] = corner_ring(z6, 4);
    CHECK(r->order() == 3);
    CHECK(members == std::vector<Index>{0, 2, 4});
    CHECK(r->one() == 2);  // local index of 4
    CHECK(find_ring_isomorphism(r, make_zn(3)).status == SearchStatus::Found);
  }
  SUBCASE("3Z_6 is a copy of Z_2") {
    auto [r, members] = corner_ring(z6, 3);
    CHECK(r->order() == 2);
    CHECK(members == std::vector<Index>{0, 3});
  }
  SUBCASE("corner at one is the ring itself") {
    auto [r, members] = corner_ring(z6, 1);
    CHECK(r.get() == z6.get());
    CHECK(members.size() == 6);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(corner_ring(z6, 2), std::invalid_argument);  // not idempotent
    CHECK_THROWS_AS(corner_ring(z6, 0), std::invalid_argument);  // zero
  }
}

TEST_CASE("ring homomorphisms") {
  const auto z2 = make_zn(2);
  const auto z2z2 = make_product({z2, z2});

  SUBCASE("x -> (x,0) does not preserve one") {
    CHECK_THROWS_AS(RingHom(z2, z2z2, {0, 2}), std::invalid_argument);
  }
  SUBCASE("the diagonal is a valid but non-surjective hom") {
    const RingHom diag(z2, z2z2, {0, 3});
    CHECK_FALSE(diag.is_surjective());
    CHECK(diag.is_injective());
  }
  SUBCASE("composition") {
    const auto z6 = make_zn(6);
    auto [q2, p2] = make_quotient(z6, principal_ideal(z6, 2));
    const auto composite = RingHom::identity(q2).after(p2);
    CHECK(composite == p2);
  }
}

TEST_CASE("isomorphism search: obstructions and budget") {
  SUBCASE("Z_4 vs Z_2 x Z_2: additive order obstruction") {
    const auto result =
        find_ring_isomorphism(make_zn(4), make_product({make_zn(2), make_zn(2)}));
    CHECK(result.status == SearchStatus::NotIsomorphic);
  }
  SUBCASE("a ring is isomorphic to itself immediately") {
    const auto z6 = make_zn(6);
    const auto result = find_ring_isomorphism(z6, z6);
    REQUIRE(result.status == SearchStatus::Found);
    CHECK(*result.iso == RingHom::identity(z6));
    CHECK(result.nodes == 0);
  }
  SUBCASE("budget exhaustion reports unknown, never a false negative") {
    // F_3[Z_2 x Z_2] splits into four copies of F_3, so these are isomorphic
    const auto a = make_group_algebra(make_zn(3), {2, 2});
    const auto b = make_product({make_zn(3), make_zn(3), make_zn(3), make_zn(3)});
    CHECK(find_ring_isomorphism(a, b, 1).status == SearchStatus::Unknown);
    CHECK(find_ring_isomorphism(a, b).status == SearchStatus::Found);
  }
  SUBCASE("F_4 vs Z_4: not isomorphic") {
    CHECK(find_ring_isomorphism(make_poly_quotient(2, {1, 1, 1}), make_zn(4)).status ==
          SearchStatus::NotIsomorphic);
  }
}

TEST_CASE("additive orders") {
  const auto z4 = make_zn(4);
  CHECK(additive_order(*z4, 0) == 1);
  CHECK(additive_order(*z4, 1) == 4);
  CHECK(additive_order(*z4, 2) == 2);
}

TEST_CASE("ring spec DSL round trips") {
  const std::vector<std::string> specs = {
      "zn:6",
      "zn:1",
      "poly:p=2,mod=[1,1,1]",
      "prod:(zn:2,zn:3)",
      "prod:(zn:2,prod:(zn:2,zn:3))",
      "ga:base=zn:2,group=[2]",
      "ga:base=poly:p=2,mod=[1,1,1],group=[2,2]",
      "quot:zn:6/gens=[2]",
      "quot:quot:zn:12/gens=[6]/gens=[2]",
      "corner:zn:6@4",
  };
  for (const auto& spec : specs) {
    INFO(spec);
    const auto r = parse_ring_spec(spec);
    const auto again = parse_ring_spec(r->descriptor());
    CHECK(again->order() == r->order());
    CHECK(again->descriptor() == r->descriptor());
  }
}

TEST_CASE("ring spec DSL rejections") {
  CHECK_THROWS_AS(parse_ring_spec("zn:"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("zn:0"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("wat:5"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("poly:p=2"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("poly:p=2,mod=[1,1"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("prod:(zn:2"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("quot:zn:6/gens=[9]"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("ga:base=zn:2,group=[]"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("corner:zn:6@7"), ParseError);
}

TEST_CASE("sampled validation is deterministic for a fixed seed") {
  const auto big = make_group_algebra(make_zn(3), {2, 2});  // order 81 > default 64
  const auto r1 = validate_ring(*big, 64, 2000, 42);
  const auto r2 = validate_ring(*big, 64, 2000, 42);
  CHECK(r1.sampled);
  CHECK(r1.all_passed);
  REQUIRE(r1.laws.size() == r2.laws.size());
  for (std::size_t i = 0; i < r1.laws.size(); ++i)
    CHECK(r1.laws[i].cases == r2.laws[i].cases);
}
