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

#include <algorithm>
#include <map>
#include <tuple>

#include "meadows/finite_ring.hpp"

namespace meadows {

namespace {

// per-element invariant used to prune image candidates
struct ElementShape {
  std::size_t add_order = 0;
  bool unit = false;
  bool idempotent = false;
  std::size_t nilpotency = 0;  // least k with x^k = 0, or 0 if never
  std::size_t unit_order = 0;  // multiplicative order for units

  auto key() const {
    return std::tie(add_order, unit, idempotent, nilpotency, unit_order);
  }
  bool operator==(const ElementShape& o) const { return key() == o.key(); }
  bool operator<(const ElementShape& o) const { return key() < o.key(); }
};

std::vector<ElementShape> element_shapes(const FiniteRing& r) {
  const auto is_unit = unit_mask(r);
  std::vector<ElementShape> shapes(r.order());
  for (Index x = 0; x < r.order(); ++x) {
    ElementShape s;
    s.add_order = additive_order(r, x);
    s.unit = is_unit[x];
    s.idempotent = r.mul(x, x) == x;
    Index acc = x;
    for (std::size_t k = 1; k <= r.order(); ++k) {
      if (acc == r.zero()) {
        s.nilpotency = k;
        break;
      }
      acc = r.mul(acc, x);
    }
    if (s.unit) {
      acc = x;
      std::size_t k = 1;
      while (acc != r.one()) {
        acc = r.mul(acc, x);
        ++k;
      }
      s.unit_order = k;
    }
    shapes[x] = s;
  }
  return shapes;
}

// how each element of the closure of {0, 1, generators} is first produced
struct Production {
  enum Kind { Zero, One, Generator, Add, Mul, Neg } kind = Zero;
  std::size_t gen = 0;  // for Generator
  Index a = 0, b = 0;   // operand element indices
};

struct ClosurePlan {
  std::vector<Index> generators;
  std::vector<Index> order;             // production order, covers the ring
  std::vector<Production> production;   // indexed by element
};

// deterministic closure; records a production witness per element
void close_over(const FiniteRing& r, const std::vector<Index>& gens,
                std::vector<Index>& order, std::vector<Production>& prod,
                std::vector<bool>& in) {
  auto emit = [&](Index v, Production p) {
    if (!in[v]) {
      in[v] = true;
      prod[v] = p;
      order.push_back(v);
    }
  };
  emit(r.zero(), {Production::Zero, 0, 0, 0});
  emit(r.one(), {Production::One, 0, 0, 0});
  for (std::size_t g = 0; g < gens.size(); ++g)
    emit(gens[g], {Production::Generator, g, 0, 0});

  for (std::size_t i = 0; i < order.size(); ++i) {
    const Index x = order[i];
    emit(r.neg(x), {Production::Neg, 0, x, 0});
    for (std::size_t j = 0; j <= i; ++j) {
      const Index y = order[j];
      emit(r.add(x, y), {Production::Add, 0, x, y});
      emit(r.mul(x, y), {Production::Mul, 0, x, y});
    }
  }
}

ClosurePlan make_plan(const FiniteRing& r) {
  ClosurePlan plan;
  while (true) {
    plan.order.clear();
    plan.production.assign(r.order(), {});
    std::vector<bool> in(r.order(), false);
    close_over(r, plan.generators, plan.order, plan.production, in);
    if (plan.order.size() == r.order()) return plan;
    for (Index x = 0; x < r.order(); ++x) {
      if (!in[x]) {
        plan.generators.push_back(x);  // least element outside the closure
        break;
      }
    }
  }
}

// replays the plan in s; the unique hom candidate with the given generator
// images, if one exists
std::vector<Index> replay(const ClosurePlan& plan, const FiniteRing& s,
                          const std::vector<Index>& gen_images) {
  std::vector<Index> img(plan.production.size(), 0);
  for (Index x : plan.order) {
    const Production& p = plan.production[x];
    switch (p.kind) {
      case Production::Zero: img[x] = s.zero(); break;
      case Production::One: img[x] = s.one(); break;
      case Production::Generator: img[x] = gen_images[p.gen]; break;
      case Production::Add: img[x] = s.add(img[p.a], img[p.b]); break;
      case Production::Mul: img[x] = s.mul(img[p.a], img[p.b]); break;
      case Production::Neg: img[x] = s.neg(img[p.a]); break;
    }
  }
  return img;
}

bool is_bijective_hom(const FiniteRing& r, const FiniteRing& s,
                      const std::vector<Index>& map) {
  std::vector<bool> hit(s.order(), false);
  for (Index v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  if (map[r.zero()] != s.zero() || map[r.one()] != s.one()) return false;
  for (Index x = 0; x < r.order(); ++x)
    for (Index y = 0; y < r.order(); ++y) {
      if (map[r.add(x, y)] != s.add(map[x], map[y])) return false;
      if (map[r.mul(x, y)] != s.mul(map[x], map[y])) return false;
    }
  return true;
}

}  // namespace

SearchStatus for_each_ring_isomorphism(
    const RingPtr& r, const RingPtr& s, std::uint64_t& budget,
    const std::function<bool(const RingHom&)>& fn) {
  if (r->order() != s->order()) return SearchStatus::NotIsomorphic;

  const auto shapes_r = element_shapes(*r);
  const auto shapes_s = element_shapes(*s);
  {
    auto lhs = shapes_r, rhs = shapes_s;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) return SearchStatus::NotIsomorphic;
  }

  const ClosurePlan plan = make_plan(*r);
  std::vector<std::vector<Index>> candidates(plan.generators.size());
  for (std::size_t g = 0; g < plan.generators.size(); ++g) {
    for (Index y = 0; y < s->order(); ++y)
      if (shapes_s[y] == shapes_r[plan.generators[g]]) candidates[g].push_back(y);
    if (candidates[g].empty()) return SearchStatus::NotIsomorphic;
  }

  std::vector<Index> gen_images(plan.generators.size(), 0);
  bool stopped = false, exhausted_budget = false;

  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (stopped || exhausted_budget) return;
    if (budget == 0) {
      exhausted_budget = true;
      return;
    }
    --budget;
    if (depth == plan.generators.size()) {
      const auto map = replay(plan, *s, gen_images);
      if (is_bijective_hom(*r, *s, map)) {
        if (!fn(RingHom(r, s, map))) stopped = true;
      }
      return;
    }
    for (Index y : candidates[depth]) {
      // generator images must be pairwise distinct in a bijection
      bool used = false;
      for (std::size_t d = 0; d < depth; ++d)
        if (gen_images[d] == y) used = true;
      if (used) continue;
      gen_images[depth] = y;
      descend(depth + 1);
      if (stopped || exhausted_budget) return;
    }
  };
  descend(0);

  if (stopped) return SearchStatus::Found;
  if (exhausted_budget) return SearchStatus::Unknown;
  return SearchStatus::NotIsomorphic;
}

RingIsoResult find_ring_isomorphism(const RingPtr& r, const RingPtr& s,
                                    std::uint64_t budget) {
  RingIsoResult result;
  if (r.get() == s.get()) {
    result.status = SearchStatus::Found;
    result.iso = RingHom::identity(r);
    return result;
  }
  std::uint64_t pool = budget;
  const SearchStatus walk = for_each_ring_isomorphism(
      r, s, pool, [&](const RingHom& h) {
        result.iso = h;
        return false;  // first hit suffices
      });
  result.nodes = budget - pool;
  result.status = walk;
  return result;
}

}  // namespace meadows
