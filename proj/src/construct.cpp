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

#include "meadows/construct.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "meadows/abelian_group.hpp"

namespace meadows {

namespace {

// least preimage of each coset under the per-vertex projection
std::vector<std::vector<Index>> quotient_reps(const Meadow& m) {
  const auto& prov = *m.ring_provenance();
  std::vector<std::vector<Index>> reps(m.vertex_count());
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    const RingHom& proj = prov.projections[v];
    reps[v].assign(m.fiber_ring(v)->order(), 0);
    std::vector<bool> seen(m.fiber_ring(v)->order(), false);
    for (Index x = 0; x < proj.source()->order(); ++x) {
      const Index c = proj(x);
      if (!seen[c]) {
        seen[c] = true;
        reps[v][c] = x;
      }
    }
  }
  return reps;
}

}  // namespace

MeadowPtr build_meadow_of_ring(const RingPtr& r, std::size_t cap) {
  if (r->is_zero_ring())
    throw std::invalid_argument(
        "the zero ring has no canonical meadow: the top vertex must be unital");

  auto ideals = enumerate_ideals(r, cap);
  FiniteLattice lattice = lattice_from_ideals(ideals);

  std::vector<RingPtr> rings(ideals.size());
  std::vector<RingHom> projections;
  projections.reserve(ideals.size());
  for (Vertex v = 0; v < ideals.size(); ++v) {
    auto [quotient, proj] = make_quotient(r, ideals[v]);
    rings[v] = quotient;
    projections.push_back(std::move(proj));
  }

  std::vector<EdgeHom> edges;
  for (const auto& [lo, hi] : lattice.hasse_edges()) {
    // coset of x mod the larger ideal depends only on x mod the smaller one
    std::vector<Index> map(rings[hi]->order());
    const RingHom& proj_hi = projections[hi];
    const RingHom& proj_lo = projections[lo];
    std::vector<bool> seen(rings[hi]->order(), false);
    for (Index x = 0; x < r->order(); ++x) {
      const Index c = proj_hi(x);
      if (!seen[c]) {
        seen[c] = true;
        map[c] = proj_lo(x);
      }
    }
    edges.push_back({lo, hi, std::move(map)});
  }

  RingProvenance prov{r, std::move(ideals), std::move(projections)};
  return Meadow::create(DirectedLattice::build(std::move(lattice), std::move(rings), edges),
                        std::move(prov));
}

// ---- group-algebra meadows ---------------------------------------------------

namespace {

std::string subgroup_suffix(const std::vector<unsigned>& subgroup) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < subgroup.size(); ++i)
    out << (i ? "," : "") << subgroup[i];
  out << "}";
  return out.str();
}

}  // namespace

MeadowPtr build_group_algebra_meadow(const RingPtr& base,
                                     const std::vector<unsigned>& cyclic_orders,
                                     std::size_t cap) {
  const GroupTable group = GroupTable::product_of_cyclics(cyclic_orders);
  const auto subgroups = group.subgroups();
  const std::size_t s = subgroups.size();
  const Vertex bottom = static_cast<Vertex>(s);

  std::ostringstream orders_str, gname;
  orders_str << "[";
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    orders_str << (i ? "," : "") << cyclic_orders[i];
    gname << (i ? "x" : "") << "Z" << cyclic_orders[i];
  }
  orders_str << "]";

  // quotient groups A/H with their projections A -> A/H
  std::vector<GroupTable> quotients;
  std::vector<std::vector<unsigned>> coset_of(s);
  std::vector<std::vector<unsigned>> coset_rep(s);
  quotients.reserve(s);
  for (std::size_t k = 0; k < s; ++k) {
    auto [q, proj] = group.quotient(subgroups[k]);
    coset_rep[k].assign(q.order(), 0);
    std::vector<bool> seen(q.order(), false);
    for (unsigned x = 0; x < group.order(); ++x)
      if (!seen[proj[x]]) {
        seen[proj[x]] = true;
        coset_rep[k][proj[x]] = x;
      }
    quotients.push_back(std::move(q));
    coset_of[k] = std::move(proj);
  }

  std::vector<RingPtr> rings(s + 1);
  for (std::size_t k = 0; k < s; ++k) {
    const bool trivial = subgroups[k].size() == 1;
    const std::string desc = "ga:base=" + base->descriptor() + ",group=" +
                             orders_str.str() +
                             (trivial ? "" : "/H=" + subgroup_suffix(subgroups[k]));
    const std::string name =
        base->name() + "[" + gname.str() +
        (trivial ? "" : "/" + subgroup_suffix(subgroups[k])) + "]";
    rings[k] = make_group_algebra_over(base, quotients[k], desc, name, cap);
  }
  rings[bottom] = make_zn(1);

  // reverse inclusion of subgroups, with the adjoined bottom below everything
  FiniteLattice lattice = FiniteLattice::from_leq(s + 1, [&](Vertex a, Vertex b) {
    if (a == bottom) return true;
    if (b == bottom) return false;
    return std::includes(subgroups[a].begin(), subgroups[a].end(),
                         subgroups[b].begin(), subgroups[b].end());
  });

  std::vector<EdgeHom> edges;
  for (const auto& [lo, hi] : lattice.hasse_edges()) {
    if (lo == bottom) {
      edges.push_back({lo, hi, std::nullopt});  // forced map to the zero ring
      continue;
    }
    // push coefficients along the coset collapse A/H_hi -> A/H_lo
    const std::size_t ghi = quotients[hi].order();
    const std::size_t glo = quotients[lo].order();
    const std::size_t b = base->order();
    std::vector<Index> map(rings[hi]->order());
    for (Index v = 0; v < rings[hi]->order(); ++v) {
      std::vector<Index> out(glo, base->zero());
      std::size_t rest = v;
      for (std::size_t i = 0; i < ghi; ++i) {
        const Index coeff = static_cast<Index>(rest % b);
        rest /= b;
        if (coeff == base->zero()) continue;
        const unsigned target = coset_of[lo][coset_rep[hi][i]];
        out[target] = base->add(out[target], coeff);
      }
      std::size_t enc = 0;
      for (std::size_t i = glo; i-- > 0;) enc = enc * b + out[i];
      map[v] = static_cast<Index>(enc);
    }
    edges.push_back({lo, hi, std::move(map)});
  }

  return Meadow::create(
      DirectedLattice::build(std::move(lattice), std::move(rings), edges));
}

// ---- lifting surjective homomorphisms -----------------------------------------

MeadowMap lift_surjective_hom(const RingHom& f, const MeadowPtr& source_meadow,
                              const MeadowPtr& target_meadow) {
  if (!source_meadow->ring_provenance() || !target_meadow->ring_provenance())
    throw std::invalid_argument("lift requires meadows built from rings");
  const auto& src_prov = *source_meadow->ring_provenance();
  const auto& dst_prov = *target_meadow->ring_provenance();
  if (src_prov.base_ring.get() != f.source().get() ||
      dst_prov.base_ring.get() != f.target().get())
    throw std::invalid_argument("hom endpoints do not match the meadows");
  if (!f.is_surjective())
    throw Error(
        "lift refused: the homomorphism is not surjective, and images of "
        "ideals under a non-surjective homomorphism need not be ideals");

  // vertex map: I -> f(I), located among the target's ideals
  std::map<std::vector<Index>, Vertex> ideal_vertex;
  for (Vertex w = 0; w < target_meadow->vertex_count(); ++w)
    ideal_vertex[dst_prov.ideals[w].members()] = w;

  std::vector<Vertex> vertex_image(source_meadow->vertex_count());
  for (Vertex v = 0; v < source_meadow->vertex_count(); ++v) {
    std::vector<Index> image;
    for (Index x : src_prov.ideals[v].members()) image.push_back(f(x));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const auto it = ideal_vertex.find(image);
    if (it == ideal_vertex.end())
      throw std::logic_error("image of an ideal is missing from the target's ideals");
    vertex_image[v] = it->second;
  }

  const auto reps = quotient_reps(*source_meadow);
  MeadowMap lifted;
  lifted.source = source_meadow;
  lifted.target = target_meadow;
  lifted.map.assign(source_meadow->carrier_size(), 0);
  for (Vertex v = 0; v < source_meadow->vertex_count(); ++v) {
    const Vertex w = vertex_image[v];
    const RingHom& proj_w = dst_prov.projections[w];
    for (Index c = 0; c < source_meadow->fiber_ring(v)->order(); ++c) {
      const auto src = source_meadow->element(v, c);
      const auto dst = target_meadow->element(w, proj_w(f(reps[v][c])));
      lifted.map[source_meadow->global_id(src)] = target_meadow->global_id(dst);
    }
  }

  const auto report = check_meadow_hom(lifted);
  if (!report.all_passed)
    throw std::logic_error("lifted map failed the homomorphism laws");
  return lifted;
}

// ---- products -------------------------------------------------------------------

MeadowPtr meadow_product(const MeadowPtr& p, const MeadowPtr& q) {
  return meadow_product(std::vector<MeadowPtr>{p, q});
}

MeadowPtr meadow_product(const std::vector<MeadowPtr>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty meadow product");
  if (factors.size() == 1) return factors.front();

  const std::size_t k = factors.size();
  std::vector<const FiniteLattice*> lats;
  lats.reserve(k);
  for (const auto& f : factors) lats.push_back(&f->lattice());
  FiniteLattice lattice = product_lattice(lats);

  auto decode_vertex = [&](Vertex v) {
    std::vector<Vertex> c(k);
    std::size_t rest = v;
    for (std::size_t i = k; i-- > 0;) {
      c[i] = static_cast<Vertex>(rest % lats[i]->size());
      rest /= lats[i]->size();
    }
    return c;
  };

  std::vector<RingPtr> rings(lattice.size());
  for (Vertex v = 0; v < lattice.size(); ++v) {
    const auto parts = decode_vertex(v);
    std::vector<RingPtr> fiber_parts(k);
    for (std::size_t i = 0; i < k; ++i) fiber_parts[i] = factors[i]->fiber_ring(parts[i]);
    rings[v] = make_product(fiber_parts);
  }

  std::vector<EdgeHom> edges;
  for (const auto& [lo, hi] : lattice.hasse_edges()) {
    const auto plo = decode_vertex(lo), phi = decode_vertex(hi);
    std::vector<Index> map(rings[hi]->order());
    for (Index v = 0; v < rings[hi]->order(); ++v) {
      // decode against the upper fibers, push each component, encode below
      std::vector<Index> comp(k);
      std::size_t rest = v;
      for (std::size_t i = k; i-- > 0;) {
        comp[i] = static_cast<Index>(rest % factors[i]->fiber_ring(phi[i])->order());
        rest /= factors[i]->fiber_ring(phi[i])->order();
      }
      std::size_t enc = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const Index pushed =
            factors[i]->directed_lattice().transition(plo[i], phi[i])(comp[i]);
        enc = enc * factors[i]->fiber_ring(plo[i])->order() + pushed;
      }
      map[v] = static_cast<Index>(enc);
    }
    edges.push_back({lo, hi, std::move(map)});
  }

  return Meadow::create(
      DirectedLattice::build(std::move(lattice), std::move(rings), edges));
}

}  // namespace meadows
