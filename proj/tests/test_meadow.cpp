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

#include "meadows/construct.hpp"
#include "meadows/meadow.hpp"

using namespace meadows;

namespace {

// vertex of the canonical meadow whose ideal has the given members
Vertex vertex_of_ideal(const Meadow& m, const std::vector<Index>& members) {
  const auto& ideals = m.ring_provenance()->ideals;
  for (Vertex v = 0; v < m.vertex_count(); ++v)
    if (ideals[v].members() == members) return v;
  throw std::logic_error("ideal not found");
}

// the paper-shaped diamond with both middle transitions the first projection
MeadowPtr pi1_diamond() {
  const auto top = make_product({make_zn(2), make_zn(2)});
  const auto l = FiniteLattice::from_leq(5, [](Vertex a, Vertex b) {
    if (a == b || a == 4 || b == 0) return true;
    if (a == 3 && (b == 1 || b == 2)) return true;
    return false;
  });
  const std::vector<Index> pi1 = {0, 0, 1, 1};
  const std::vector<Index> id2 = {0, 1};
  return Meadow::create(DirectedLattice::build(
      l, {top, make_zn(2), make_zn(2), make_zn(2), make_zn(1)},
      {{1, 0, pi1}, {2, 0, pi1}, {3, 1, id2}, {3, 2, id2}, {4, 3, std::nullopt}}));
}

// a diamond of one field with identity transitions; common and local
MeadowPtr field_diamond() {
  const auto f5 = make_zn(5);
  const auto l = FiniteLattice::from_leq(5, [](Vertex a, Vertex b) {
    if (a == b || a == 4 || b == 0) return true;
    if (a == 3 && (b == 1 || b == 2)) return true;
    return false;
  });
  std::vector<Index> id5 = {0, 1, 2, 3, 4};
  return Meadow::create(DirectedLattice::build(
      l, {f5, f5, f5, f5, make_zn(1)},
      {{1, 0, id5}, {2, 0, id5}, {3, 1, id5}, {3, 2, id5}, {4, 3, std::nullopt}}));
}

}  // namespace

TEST_CASE("operations push to the meet vertex") {
  const auto m = build_meadow_of_ring(make_zn(6));
  const Vertex v2 = vertex_of_ideal(*m, {0, 2, 4});
  const Vertex v3 = vertex_of_ideal(*m, {0, 3});
  const Vertex top = m->lattice().top();

  SUBCASE("incomparable vertices sum to the absorbent element") {
    const auto x = m->element(v2, 1);
    const auto y = m->element(v3, 1);
    CHECK(m->add(x, y) == m->absorbent());
    CHECK(m->mul(x, y) == m->absorbent());
  }
  SUBCASE("zero is neutral on the top fiber") {
    for (Index i = 0; i < 6; ++i)
      CHECK(m->add(m->element(top, i), m->zero()) == m->element(top, i));
  }
  SUBCASE("1 at the top plus 1 below lands below") {
    // fiber of (2) is a copy of Z_2, so 1 + 1 = 0 there
    const auto sum = m->add(m->one(), m->element(v2, 1));
    CHECK(sum == m->element(v2, 0));
  }
  SUBCASE("zero_of is the fiber zero and equals x + (-x)") {
    CHECK(m->zero_of(m->absorbent()) == m->absorbent());
    CHECK(m->zero_of(m->one()) == m->zero());
    for (std::size_t id = 0; id < m->carrier_size(); ++id) {
      const auto x = m->from_global(id);
      CHECK(m->add(x, m->neg(x)) == m->zero_of(x));
      CHECK(m->mul(m->zero(), x) == m->zero_of(x));
    }
  }
  SUBCASE("sums and products land exactly at the meet vertex") {
    for (std::size_t i = 0; i < m->carrier_size(); ++i) {
      for (std::size_t j = 0; j < m->carrier_size(); ++j) {
        const auto x = m->from_global(i), y = m->from_global(j);
        const Vertex meet = m->lattice().meet(x.vertex, y.vertex);
        CHECK(m->add(x, y).vertex == meet);
        CHECK(m->mul(x, y).vertex == meet);
      }
    }
  }
}

TEST_CASE("the order on fiber zeros matches the lattice") {
  const auto m = build_meadow_of_ring(make_zn(6));
  const Vertex v2 = vertex_of_ideal(*m, {0, 2, 4});
  const Vertex v3 = vertex_of_ideal(*m, {0, 3});

  const auto z_top = m->zero();
  const auto z2 = m->zero_of(m->element(v2, 0));
  const auto z3 = m->zero_of(m->element(v3, 0));
  const auto a = m->absorbent();

  CHECK(m->order_leq(a, z_top));
  CHECK(m->order_leq(a, z2));
  CHECK(m->order_leq(z2, z_top));
  CHECK_FALSE(m->order_leq(z_top, z2));
  CHECK_FALSE(m->order_leq(z2, z3));
  CHECK_FALSE(m->order_leq(z3, z2));

  for (Vertex v = 0; v < m->vertex_count(); ++v)
    for (Vertex w = 0; w < m->vertex_count(); ++w)
      CHECK(m->order_leq(m->zero_of(m->element(v, 0)), m->zero_of(m->element(w, 0))) ==
            m->lattice().leq(v, w));

  CHECK_THROWS_AS(m->order_leq(m->one(), z_top), std::invalid_argument);
}

TEST_CASE("invertibility sets") {
  const auto m = build_meadow_of_ring(make_zn(6));
  const Vertex v3 = vertex_of_ideal(*m, {0, 3});
  const Vertex bottom = m->lattice().bottom();

  SUBCASE("2 is a unit only mod 3") {
    const auto set = m->invertibility_set(m->element(m->lattice().top(), 2));
    CHECK(set == std::vector<Vertex>{v3, bottom});
  }
  SUBCASE("1 is a unit everywhere") {
    const auto set = m->invertibility_set(m->one());
    CHECK(set.size() == m->vertex_count());
  }
  SUBCASE("the witness of the projection diamond has two maximal vertices") {
    const auto p = pi1_diamond();
    CHECK_FALSE(p->is_common());
    const auto& w = *p->non_common_witness();
    CHECK(p->fiber_ring(w.vertex)->element_name(w.index) == "(1,0)");
    CHECK(w.maximal_vertices == std::vector<Vertex>{1, 2});
  }
}

TEST_CASE("commonality") {
  CHECK(build_meadow_of_ring(make_zn(6))->is_common());
  CHECK_FALSE(pi1_diamond()->is_common());
  // every fiber a field forces commonality
  CHECK(field_diamond()->is_common());
}

TEST_CASE("the zero-ring-only lattice is not a meadow") {
  const auto l = FiniteLattice::from_leq(1, [](Vertex, Vertex) { return true; });
  auto dl = DirectedLattice::build(l, {make_zn(1)}, {});
  CHECK_THROWS_AS(Meadow::create(std::move(dl)), std::invalid_argument);

  // the smallest legal meadow: a field above the zero ring
  const auto chain = FiniteLattice::from_leq(2, [](Vertex a, Vertex b) { return a >= b; });
  const auto m = Meadow::create(DirectedLattice::build(
      chain, {make_zn(2), make_zn(1)}, {{1, 0, std::nullopt}}));
  CHECK(m->check_pre_meadow().all_passed);
  CHECK(m->check_common().all_passed);
}

TEST_CASE("inverses on a common meadow") {
  const auto m = build_meadow_of_ring(make_zn(6));
  const Vertex v3 = vertex_of_ideal(*m, {0, 3});

  SUBCASE("inv(2) lives at the vertex of (3)") {
    const auto x = m->element(m->lattice().top(), 2);
    const auto ix = m->inv(x);
    CHECK(ix.vertex == v3);
    CHECK(m->fiber_ring(v3)->element_name(ix.index) == "2");
    // x * inv(x) = 1 + 0 * inv(x)
    CHECK(m->mul(x, ix) == m->add(m->one(), m->zero_of(ix)));
  }
  SUBCASE("fixed points") {
    CHECK(m->inv(m->one()) == m->one());
    CHECK(m->inv(m->absorbent()) == m->absorbent());
    CHECK(m->inv(m->zero()) == m->absorbent());
  }
  SUBCASE("a non-common meadow refuses inversion") {
    const auto p = pi1_diamond();
    CHECK_THROWS_AS(p->inv(p->one()), NotCommonError);
  }
}

TEST_CASE("axiom sweeps on the canonical meadow of Z_6") {
  const auto m = build_meadow_of_ring(make_zn(6));
  CHECK(m->carrier_size() == 12);

  const auto pre = m->check_pre_meadow();
  CHECK(pre.all_passed);
  CHECK_FALSE(pre.sampled);
  REQUIRE(pre.results.size() == 13);  // P1..P10 plus the structural conditions
  for (const auto& r : pre.results)
    if (r.axiom == "P1") CHECK(r.cases == 12 * 12 * 12);

  const auto common = m->check_common();
  CHECK(common.all_passed);
  REQUIRE(common.results.size() == 4);  // M1..M4
}

TEST_CASE("a broken multiplication is caught with a counterexample") {
  // order-3 'ring' with 2*2 forced to 2 instead of 1, which breaks
  // distributivity; FiniteRing::create does not validate laws, so the
  // sweep has to catch it
  auto broken = FiniteRing::create(
      3, 0, 1, [](Index x, Index y) { return (x + y) % 3; },
      [](Index x, Index y) {
        if (x == 2 && y == 2) return Index{2};
        return (x * y) % 3;
      },
      [](Index x) { return (3 - x) % 3; }, "broken", "broken", nullptr);
  const auto l = FiniteLattice::from_leq(2, [](Vertex a, Vertex b) { return a >= b; });
  const auto m = Meadow::create(
      DirectedLattice::build(l, {broken, make_zn(1)}, {{1, 0, std::nullopt}}));
  const auto pre = m->check_pre_meadow();
  CHECK_FALSE(pre.all_passed);
  bool some_law_failed_with_witness = false;
  for (const auto& r : pre.results)
    if (!r.passed && !r.counterexample.empty()) some_law_failed_with_witness = true;
  CHECK(some_law_failed_with_witness);
}

TEST_CASE("locality") {
  CHECK(build_meadow_of_ring(make_zn(4))->is_local());
  CHECK_FALSE(build_meadow_of_ring(make_zn(6))->is_local());
  CHECK(field_diamond()->is_local());
  // the projection diamond is local despite not being common
  CHECK(pi1_diamond()->is_local());
  CHECK(pi1_diamond()->atoms().size() == 1);
  CHECK(build_meadow_of_ring(make_zn(6))->atoms().size() == 2);

  // an identity chain of one field: common by the all-fields criterion,
  // local because nothing ever collapses to a
  const auto l = FiniteLattice::from_leq(3, [](Vertex a, Vertex b) { return a >= b; });
  const std::vector<Index> id5 = {0, 1, 2, 3, 4};
  const auto f5_chain = Meadow::create(DirectedLattice::build(
      l, {make_zn(5), make_zn(5), make_zn(1)}, {{1, 0, id5}, {2, 1, std::nullopt}}));
  CHECK(f5_chain->is_common());
  CHECK(f5_chain->is_local());
}

TEST_CASE("pre-meadows with a totally ordered zero set are common") {
  // chain-shaped examples; the claim is checked, not assumed
  std::vector<MeadowPtr> chains;
  chains.push_back(build_meadow_of_ring(make_zn(4)));
  chains.push_back(build_meadow_of_ring(make_zn(8)));
  chains.push_back(build_meadow_of_ring(make_poly_quotient(2, {0, 0, 1})));
  {
    // Z_6 -> Z_6 -> 0 with the identity in the middle
    const auto l = FiniteLattice::from_leq(3, [](Vertex a, Vertex b) { return a >= b; });
    std::vector<Index> id6 = {0, 1, 2, 3, 4, 5};
    chains.push_back(Meadow::create(DirectedLattice::build(
        l, {make_zn(6), make_zn(6), make_zn(1)},
        {{1, 0, id6}, {2, 1, std::nullopt}})));
  }
  {
    // Z_4 -> Z_2 -> 0 with the canonical projection
    const auto l = FiniteLattice::from_leq(3, [](Vertex a, Vertex b) { return a >= b; });
    const std::vector<Index> proj = {0, 1, 0, 1};
    chains.push_back(Meadow::create(DirectedLattice::build(
        l, {make_zn(4), make_zn(2), make_zn(1)},
        {{1, 0, proj}, {2, 1, std::nullopt}})));
  }
  for (const auto& m : chains) {
    // confirm the chain shape, then the conclusion
    for (Vertex v = 0; v < m->vertex_count(); ++v)
      for (Vertex w = 0; w < m->vertex_count(); ++w)
        CHECK((m->lattice().leq(v, w) || m->lattice().leq(w, v)));
    CHECK(m->is_common());
    CHECK(m->check_pre_meadow().all_passed);
  }
}

TEST_CASE("transition-map laws hold on built meadows") {
  for (const auto& m :
       {build_meadow_of_ring(make_zn(6)), build_meadow_of_ring(make_zn(12)),
        pi1_diamond(), field_diamond()}) {
    const auto report = check_transition_maps(*m);
    CHECK(report.all_passed);
  }
}

TEST_CASE("element plumbing") {
  const auto m = build_meadow_of_ring(make_zn(6));
  const auto n = build_meadow_of_ring(make_zn(6));

  SUBCASE("cross-meadow elements are rejected") {
    CHECK_THROWS_AS(m->add(m->one(), n->one()), std::invalid_argument);
    CHECK_THROWS_AS(m->neg(n->zero()), std::invalid_argument);
  }
  SUBCASE("global ids round-trip") {
    for (std::size_t id = 0; id < m->carrier_size(); ++id)
      CHECK(m->global_id(m->from_global(id)) == id);
  }
  SUBCASE("out-of-range construction fails") {
    CHECK_THROWS_AS(m->element(0, 99), std::invalid_argument);
    CHECK_THROWS_AS(m->element(99, 0), std::invalid_argument);
    CHECK_THROWS_AS(m->from_global(m->carrier_size()), std::invalid_argument);
  }
  SUBCASE("the absorbent element prints as a") {
    CHECK(m->element_name(m->absorbent()) == "a");
    CHECK(m->element_name(m->one()) == "1");
  }
}

TEST_CASE("sampled sweeps are deterministic for a fixed seed") {
  const auto m = build_meadow_of_ring(make_zn(12));
  CheckOptions opts;
  opts.force_sampled = true;
  opts.samples = 5000;
  opts.seed = 7;
  const auto r1 = m->check_pre_meadow(opts);
  const auto r2 = m->check_pre_meadow(opts);
  CHECK(r1.sampled);
  CHECK(r1.all_passed);
  REQUIRE(r1.results.size() == r2.results.size());
  for (std::size_t i = 0; i < r1.results.size(); ++i) {
    CHECK(r1.results[i].passed == r2.results[i].passed);
    CHECK(r1.results[i].cases == r2.results[i].cases);
  }
}

TEST_CASE("meadow maps: verification catches non-homomorphisms") {
  const auto m = build_meadow_of_ring(make_zn(4));
  MeadowMap bad;
  bad.source = m;
  bad.target = m;
  bad.map.assign(m->carrier_size(), m->global_id(m->absorbent()));
  const auto report = check_meadow_hom(bad);
  CHECK_FALSE(report.all_passed);  // f(1) != 1

  MeadowMap id;
  id.source = m;
  id.target = m;
  id.map.resize(m->carrier_size());
  for (std::size_t i = 0; i < id.map.size(); ++i) id.map[i] = i;
  CHECK(verify_meadow_iso(id).all_passed);
}
