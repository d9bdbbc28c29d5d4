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

#include "meadows/ideal.hpp"

using namespace meadows;

namespace {

// oracle for Z_n: the ideal generated by d is the set of multiples of gcd(d, n)
std::set<Index> zn_principal_oracle(unsigned n, unsigned d) {
  std::set<Index> out;
  for (unsigned x = 0; x < n; ++x)
    for (unsigned k = 0; k < n; ++k)
      if ((d * k) % n == x) out.insert(x);
  return out;
}

std::set<std::set<Index>> member_sets(const std::vector<Ideal>& ideals) {
  std::set<std::set<Index>> out;
  for (const auto& i : ideals) out.insert({i.members().begin(), i.members().end()});
  return out;
}

}  // namespace

TEST_CASE("principal ideals") {
  const auto z6 = make_zn(6);
  CHECK(principal_ideal(z6, 2).members() == std::vector<Index>{0, 2, 4});
  CHECK(principal_ideal(z6, 0).members() == std::vector<Index>{0});
  CHECK(principal_ideal(z6, 1).size() == 6);
  CHECK(principal_ideal(z6, 2).label() == "(2)");
  CHECK(principal_ideal(z6, 0).label() == "(0)");
  CHECK_THROWS_AS(principal_ideal(z6, 9), std::invalid_argument);

  for (unsigned d = 0; d < 12; ++d) {
    const auto z12 = make_zn(12);
    const auto ideal = principal_ideal(z12, d);
    CHECK(std::set<Index>(ideal.members().begin(), ideal.members().end()) ==
          zn_principal_oracle(12, d));
  }
}

TEST_CASE("ideal sum and intersection") {
  const auto z6 = make_zn(6);
  const auto two = principal_ideal(z6, 2);
  const auto three = principal_ideal(z6, 3);

  // (2) + (3) = (1), the whole ring
  CHECK(ideal_sum(two, three).is_unit_ideal());
  // (2) and (3) meet only in 0
  CHECK(ideal_intersection(two, three).members() == std::vector<Index>{0});

  const auto zero = principal_ideal(z6, 0);
  CHECK(ideal_sum(two, zero) == two);
  CHECK(ideal_intersection(two, two) == two);

  const auto z4 = make_zn(4);
  CHECK_THROWS_AS(ideal_sum(two, principal_ideal(z4, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ideal_intersection(two, principal_ideal(z4, 2)),
                  std::invalid_argument);
}

TEST_CASE("outputs of ideal operations satisfy the ideal laws") {
  const auto z12 = make_zn(12);
  const auto all = enumerate_ideals(z12);
  for (const auto& i : all) {
    CHECK(is_ideal(*z12, i.members()));
    for (const auto& j : all) {
      CHECK(is_ideal(*z12, ideal_sum(i, j).members()));
      CHECK(is_ideal(*z12, ideal_intersection(i, j).members()));
    }
  }
  CHECK_FALSE(is_ideal(*make_zn(4), {0, 1}));
  CHECK_FALSE(is_ideal(*make_zn(4), {1, 2}));
}

TEST_CASE("ideal enumeration") {
  SUBCASE("Z_6 has exactly the four ideals of its divisors") {
    const auto ideals = enumerate_ideals(make_zn(6));
    REQUIRE(ideals.size() == 4);
    CHECK(member_sets(ideals) ==
          std::set<std::set<Index>>{
              {0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});
    // canonical order: by cardinality, then lexicographic
    CHECK(ideals[0].label() == "(0)");
    CHECK(ideals[1].label() == "(3)");
    CHECK(ideals[2].label() == "(2)");
    CHECK(ideals[3].label() == "(1)");
  }
  SUBCASE("Z_12 has one ideal per divisor") {
    const auto z12 = make_zn(12);
    const auto ideals = enumerate_ideals(z12);
    CHECK(ideals.size() == 6);  // divisors 1, 2, 3, 4, 6, 12
    std::set<std::set<Index>> expected;
    for (unsigned d : {0u, 1u, 2u, 3u, 4u, 6u}) expected.insert(zn_principal_oracle(12, d));
    CHECK(member_sets(ideals) == expected);
  }
  SUBCASE("a field has only the trivial ideals") {
    CHECK(enumerate_ideals(make_poly_quotient(2, {1, 1, 1})).size() == 2);
  }
  SUBCASE("the zero ring has a single ideal") {
    CHECK(enumerate_ideals(make_zn(1)).size() == 1);
  }
  SUBCASE("cap refusal") {
    CHECK_THROWS_AS(enumerate_ideals(make_zn(100), 50), CapError);
  }
}

TEST_CASE("enumeration is closed under sum and intersection") {
  for (const auto& r : {make_zn(12), make_product({make_zn(2), make_zn(4)})}) {
    const auto ideals = enumerate_ideals(r);
    const auto sets = member_sets(ideals);
    for (const auto& i : ideals)
      for (const auto& j : ideals) {
        const auto s = ideal_sum(i, j);
        const auto x = ideal_intersection(i, j);
        CHECK(sets.count({s.members().begin(), s.members().end()}) == 1);
        CHECK(sets.count({x.members().begin(), x.members().end()}) == 1);
      }
  }
}

TEST_CASE("ideals of a product are products of ideals") {
  const auto z2 = make_zn(2);
  const auto z4 = make_zn(4);
  const auto prod = make_product({z2, z4});

  std::set<std::set<Index>> expected;
  for (const auto& i : enumerate_ideals(z2)) {
    for (const auto& j : enumerate_ideals(z4)) {
      std::set<Index> members;
      for (Index a : i.members())
        for (Index b : j.members()) members.insert(a * 4 + b);  // product encoding
      expected.insert(std::move(members));
    }
  }
  CHECK(member_sets(enumerate_ideals(prod)) == expected);
  CHECK(enumerate_ideals(prod).size() ==
        enumerate_ideals(z2).size() * enumerate_ideals(z4).size());
}

TEST_CASE("maximal ideals") {
  SUBCASE("Z_6") {
    const auto maxi = maximal_ideals(make_zn(6));
    REQUIRE(maxi.size() == 2);
    CHECK(member_sets(maxi) == std::set<std::set<Index>>{{0, 3}, {0, 2, 4}});
  }
  SUBCASE("Z_4 is local") {
    const auto maxi = maximal_ideals(make_zn(4));
    REQUIRE(maxi.size() == 1);
    CHECK(maxi[0].members() == std::vector<Index>{0, 2});
  }
  SUBCASE("F_2[x]/(x^2) is local with maximal ideal (x)") {
    const auto maxi = maximal_ideals(make_poly_quotient(2, {0, 0, 1}));
    REQUIRE(maxi.size() == 1);
    CHECK(maxi[0].label() == "(x)");
  }
  SUBCASE("the zero ring has none") {
    CHECK(maximal_ideals(make_zn(1)).empty());
  }
}

TEST_CASE("every proper ideal lies under a maximal one") {
  for (const auto& r : {make_zn(12), make_zn(6), make_product({make_zn(2), make_zn(4)})}) {
    const auto all = enumerate_ideals(r);
    const auto maxi = maximal_ideals(r);
    for (const auto& i : all) {
      if (i.is_unit_ideal()) continue;
      CHECK(std::any_of(maxi.begin(), maxi.end(),
                        [&](const Ideal& m) { return i.subset_of(m); }));
    }
  }
}

TEST_CASE("units of a quotient by an intersection factor through both quotients") {
  // for all x, I, J: x + (I cap J) invertible iff invertible mod I and mod J
  for (const auto& r : {make_zn(6), make_zn(12)}) {
    const auto ideals = enumerate_ideals(r);
    for (const auto& i : ideals) {
      for (const auto& j : ideals) {
        auto [qi, pi] = make_quotient(r, i);
        auto [qj, pj] = make_quotient(r, j);
        auto [qm, pm] = make_quotient(r, ideal_intersection(i, j));
        const auto ui = unit_mask(*qi);
        const auto uj = unit_mask(*qj);
        const auto um = unit_mask(*qm);
        for (Index x = 0; x < r->order(); ++x)
          CHECK(um[pm(x)] == (ui[pi(x)] && uj[pj(x)]));
      }
    }
  }
}
