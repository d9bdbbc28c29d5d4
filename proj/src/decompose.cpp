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
#include <numeric>
#include <sstream>

#include "meadows/construct.hpp"

namespace meadows {

namespace {

std::vector<std::vector<Index>> quotient_reps_of(const Meadow& m) {
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

// ---- decomposition into local factors -------------------------------------------

Decomposition decompose_local(const MeadowPtr& m, const DecomposeOptions& opts) {
  if (!m->ring_provenance())
    throw Error(
        "decomposition refused: this meadow was not built from a ring, and a "
        "general meadow may be indecomposable");
  const RingPtr base = m->ring_provenance()->base_ring;

  std::vector<Index> prim = primitive_idempotents(*base);
  if (opts.idempotent_order) {
    const auto& perm = *opts.idempotent_order;
    if (perm.size() != prim.size())
      throw std::invalid_argument("idempotent permutation has the wrong size");
    std::vector<Index> permuted(prim.size());
    std::vector<bool> used(prim.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] >= prim.size() || used[perm[i]])
        throw std::invalid_argument("idempotent order is not a permutation");
      used[perm[i]] = true;
      permuted[i] = prim[perm[i]];
    }
    prim = std::move(permuted);
  }

  struct Factor {
    Index idempotent;
    RingPtr ring;
    std::vector<Index> embedding;
  };
  std::vector<Factor> factors;
  for (Index e : prim) {
    auto [ring, embedding] = corner_ring(base, e);
    if (maximal_ideals(ring, opts.cap).size() != 1)
      throw std::logic_error("corner ring of a primitive idempotent is not local");
    factors.push_back({e, std::move(ring), std::move(embedding)});
  }
  // canonical order, independent of how the idempotents were discovered
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    if (a.ring->order() != b.ring->order()) return a.ring->order() < b.ring->order();
    return a.ring->descriptor() < b.ring->descriptor();
  });

  Decomposition dec;
  dec.meadow = m;
  const std::size_t t = factors.size();
  for (const auto& f : factors) {
    dec.idempotents.push_back(f.idempotent);
    dec.factor_rings.push_back(f.ring);
    dec.factors.push_back(build_meadow_of_ring(f.ring, opts.cap));
  }
  dec.product = meadow_product(dec.factors);

  // explicit isomorphism: (x_1 + I_1, ..., x_t + I_t) -> (sum x_i) + I,
  // where I = { x : e_i * x in I_i for all i }
  std::map<std::vector<Index>, Vertex> target_vertex;
  for (Vertex w = 0; w < m->vertex_count(); ++w)
    target_vertex[m->ring_provenance()->ideals[w].members()] = w;

  std::vector<std::vector<std::vector<Index>>> factor_reps(t);
  for (std::size_t i = 0; i < t; ++i) factor_reps[i] = quotient_reps_of(*dec.factors[i]);

  // per factor and per factor-vertex: the ideal members embedded into the base
  std::vector<std::vector<std::vector<bool>>> embedded_ideal(t);
  for (std::size_t i = 0; i < t; ++i) {
    const auto& prov_i = *dec.factors[i]->ring_provenance();
    embedded_ideal[i].resize(dec.factors[i]->vertex_count());
    for (Vertex v = 0; v < dec.factors[i]->vertex_count(); ++v) {
      std::vector<bool> mask(base->order(), false);
      for (Index local : prov_i.ideals[v].members())
        mask[factors[i].embedding[local]] = true;
      embedded_ideal[i][v] = std::move(mask);
    }
  }

  const Meadow& prod = *dec.product;
  MeadowMap iso;
  iso.source = dec.product;
  iso.target = m;
  iso.map.assign(prod.carrier_size(), 0);

  // vertex tuple of a product vertex (single factor: the vertex itself)
  auto vertex_tuple = [&](Vertex v) {
    std::vector<Vertex> c(t);
    std::size_t rest = v;
    for (std::size_t i = t; i-- > 0;) {
      c[i] = static_cast<Vertex>(rest % dec.factors[i]->lattice().size());
      rest /= dec.factors[i]->lattice().size();
    }
    return c;
  };

  const auto& m_prov = *m->ring_provenance();
  for (Vertex pv = 0; pv < prod.vertex_count(); ++pv) {
    const auto tuple = vertex_tuple(pv);

    std::vector<Index> ideal_members;
    for (Index x = 0; x < base->order(); ++x) {
      bool in_all = true;
      for (std::size_t i = 0; i < t; ++i) {
        if (!embedded_ideal[i][tuple[i]][base->mul(factors[i].idempotent, x)]) {
          in_all = false;
          break;
        }
      }
      if (in_all) ideal_members.push_back(x);
    }
    const auto it = target_vertex.find(ideal_members);
    if (it == target_vertex.end())
      throw std::logic_error("product ideal tuple has no matching ideal in the base ring");
    const Vertex w = it->second;

    for (Index c = 0; c < prod.fiber_ring(pv)->order(); ++c) {
      // component cosets -> representatives -> embedded sum in the base ring
      std::vector<Index> comp(t);
      std::size_t rest = c;
      for (std::size_t i = t; i-- > 0;) {
        comp[i] =
            static_cast<Index>(rest % dec.factors[i]->fiber_ring(tuple[i])->order());
        rest /= dec.factors[i]->fiber_ring(tuple[i])->order();
      }
      Index sum = base->zero();
      for (std::size_t i = 0; i < t; ++i) {
        const Index local_rep = factor_reps[i][tuple[i]][comp[i]];
        sum = base->add(sum, factors[i].embedding[local_rep]);
      }
      const auto src = prod.element(pv, c);
      const auto dst = m->element(w, m_prov.projections[w](sum));
      iso.map[prod.global_id(src)] = m->global_id(dst);
    }
  }

  dec.iso = std::move(iso);
  dec.iso_report = verify_meadow_iso(dec.iso);
  return dec;
}

// ---- isomorphism of meadows -------------------------------------------------------

namespace {

struct VertexProfile {
  std::size_t fiber_order = 0;
  std::size_t below = 0;
  std::size_t above = 0;
  bool operator==(const VertexProfile& o) const {
    return fiber_order == o.fiber_order && below == o.below && above == o.above;
  }
  bool operator<(const VertexProfile& o) const {
    return std::tie(fiber_order, below, above) <
           std::tie(o.fiber_order, o.below, o.above);
  }
};

std::vector<VertexProfile> vertex_profiles(const Meadow& m) {
  std::vector<VertexProfile> out(m.vertex_count());
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    VertexProfile p;
    p.fiber_order = m.fiber_ring(v)->order();
    for (Vertex w = 0; w < m.vertex_count(); ++w) {
      if (m.lattice().leq(w, v)) ++p.below;
      if (m.lattice().leq(v, w)) ++p.above;
    }
    out[v] = p;
  }
  return out;
}

MeadowMap identity_map(const MeadowPtr& m) {
  MeadowMap f;
  f.source = m;
  f.target = m;
  f.map.resize(m->carrier_size());
  std::iota(f.map.begin(), f.map.end(), std::size_t{0});
  return f;
}

// backtracking over order-isomorphisms of the lattices combined with
// per-vertex ring isomorphisms compatible with the transitions
struct GeneralIsoSearch {
  const MeadowPtr& A;
  const MeadowPtr& B;
  std::uint64_t& budget;
  const std::vector<VertexProfile> prof_a, prof_b;
  std::vector<int> sigma;                     // A vertex -> B vertex or -1
  std::vector<bool> used;                     // B vertices taken
  std::vector<std::optional<RingHom>> phi;    // per A vertex
  std::optional<MeadowMap> found;
  bool out_of_budget = false;

  GeneralIsoSearch(const MeadowPtr& a, const MeadowPtr& b, std::uint64_t& bud)
      : A(a), B(b), budget(bud), prof_a(vertex_profiles(*a)), prof_b(vertex_profiles(*b)),
        sigma(a->vertex_count(), -1), used(b->vertex_count(), false),
        phi(a->vertex_count()) {}

  bool order_consistent(Vertex v, Vertex w) const {
    for (Vertex u = 0; u < sigma.size(); ++u) {
      if (sigma[u] < 0 || u == v) continue;
      const Vertex wu = static_cast<Vertex>(sigma[u]);
      if (A->lattice().leq(u, v) != B->lattice().leq(wu, w)) return false;
      if (A->lattice().leq(v, u) != B->lattice().leq(w, wu)) return false;
    }
    return true;
  }

  bool transitions_compatible(Vertex v, const RingHom& cand) const {
    for (Vertex u = 0; u < sigma.size(); ++u) {
      if (sigma[u] < 0 || !phi[u] || u == v) continue;
      const Vertex wu = static_cast<Vertex>(sigma[u]);
      const Vertex wv = static_cast<Vertex>(sigma[v]);
      if (A->lattice().leq(v, u)) {
        const RingHom& fa = A->directed_lattice().transition(v, u);
        const RingHom& fb = B->directed_lattice().transition(wv, wu);
        for (Index x = 0; x < A->fiber_ring(u)->order(); ++x)
          if (cand(fa(x)) != fb((*phi[u])(x))) return false;
      }
      if (A->lattice().leq(u, v)) {
        const RingHom& fa = A->directed_lattice().transition(u, v);
        const RingHom& fb = B->directed_lattice().transition(wu, wv);
        for (Index x = 0; x < A->fiber_ring(v)->order(); ++x)
          if ((*phi[u])(fa(x)) != fb(cand(x))) return false;
      }
    }
    return true;
  }

  void assemble() {
    MeadowMap f;
    f.source = A;
    f.target = B;
    f.map.assign(A->carrier_size(), 0);
    for (Vertex v = 0; v < A->vertex_count(); ++v) {
      for (Index i = 0; i < A->fiber_ring(v)->order(); ++i) {
        const auto src = A->element(v, i);
        const auto dst = B->element(static_cast<Vertex>(sigma[v]), (*phi[v])(i));
        f.map[A->global_id(src)] = B->global_id(dst);
      }
    }
    if (verify_meadow_iso(f).all_passed) found = f;
  }

  void descend(Vertex v) {
    if (found || out_of_budget) return;
    if (v == A->vertex_count()) {
      assemble();
      return;
    }
    for (Vertex w = 0; w < B->vertex_count(); ++w) {
      if (used[w] || !(prof_a[v] == prof_b[w]) || !order_consistent(v, w)) continue;
      if (budget == 0) {
        out_of_budget = true;
        return;
      }
      --budget;
      sigma[v] = static_cast<int>(w);
      used[w] = true;
      const auto walk = for_each_ring_isomorphism(
          A->fiber_ring(v), B->fiber_ring(w), budget, [&](const RingHom& h) {
            if (!transitions_compatible(v, h)) return true;  // keep looking
            phi[v] = h;
            descend(v + 1);
            phi[v].reset();
            return !found.has_value();  // stop the walk once assembled
          });
      if (walk == SearchStatus::Unknown) out_of_budget = true;
      used[w] = false;
      sigma[v] = -1;
      if (found || out_of_budget) return;
    }
  }
};

}  // namespace

MeadowIsoResult meadows_isomorphic(const MeadowPtr& a, const MeadowPtr& b,
                                   std::uint64_t budget) {
  MeadowIsoResult result;
  if (a.get() == b.get()) {
    result.status = SearchStatus::Found;
    result.iso = identity_map(a);
    return result;
  }

  if (a->carrier_size() != b->carrier_size()) {
    result.status = SearchStatus::NotIsomorphic;
    result.obstruction = "carrier sizes differ: " + std::to_string(a->carrier_size()) +
                         " vs " + std::to_string(b->carrier_size());
    return result;
  }
  if (a->vertex_count() != b->vertex_count()) {
    result.status = SearchStatus::NotIsomorphic;
    result.obstruction =
        "different lattice structures: " + std::to_string(a->vertex_count()) +
        " vs " + std::to_string(b->vertex_count()) + " vertices";
    return result;
  }
  {
    auto pa = vertex_profiles(*a), pb = vertex_profiles(*b);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (!(pa == pb)) {
      result.status = SearchStatus::NotIsomorphic;
      result.obstruction =
          "different lattice structures: vertex profiles (fiber order, "
          "below-count, above-count) do not match";
      return result;
    }
  }

  // canonical meadows of rings are isomorphic iff their top fibers are
  if (a->ring_provenance() && b->ring_provenance()) {
    std::uint64_t pool = budget;
    const RingPtr ra = a->ring_provenance()->base_ring;
    const RingPtr rb = b->ring_provenance()->base_ring;
    RingIsoResult rings = find_ring_isomorphism(ra, rb, pool);
    result.nodes = rings.nodes;
    if (rings.status == SearchStatus::Unknown) {
      result.status = SearchStatus::Unknown;
      return result;
    }
    if (rings.status == SearchStatus::NotIsomorphic) {
      result.status = SearchStatus::NotIsomorphic;
      result.obstruction = "top-fiber rings are not isomorphic";
      return result;
    }

    const RingHom& psi = *rings.iso;
    std::map<std::vector<Index>, Vertex> vertex_of;
    for (Vertex w = 0; w < b->vertex_count(); ++w)
      vertex_of[b->ring_provenance()->ideals[w].members()] = w;

    const auto reps = quotient_reps_of(*a);
    MeadowMap f;
    f.source = a;
    f.target = b;
    f.map.assign(a->carrier_size(), 0);
    for (Vertex v = 0; v < a->vertex_count(); ++v) {
      std::vector<Index> image;
      for (Index x : a->ring_provenance()->ideals[v].members()) image.push_back(psi(x));
      std::sort(image.begin(), image.end());
      const auto it = vertex_of.find(image);
      if (it == vertex_of.end())
        throw std::logic_error("ring isomorphism does not map ideals to ideals");
      const Vertex w = it->second;
      const RingHom& proj_w = b->ring_provenance()->projections[w];
      for (Index c = 0; c < a->fiber_ring(v)->order(); ++c) {
        const auto src = a->element(v, c);
        const auto dst = b->element(w, proj_w(psi(reps[v][c])));
        f.map[a->global_id(src)] = b->global_id(dst);
      }
    }
    if (!verify_meadow_iso(f).all_passed)
      throw std::logic_error("lifted ring isomorphism failed verification");
    result.status = SearchStatus::Found;
    result.iso = std::move(f);
    return result;
  }

  std::uint64_t pool = budget;
  GeneralIsoSearch search(a, b, pool);
  search.descend(0);
  result.nodes = budget - pool;
  if (search.found) {
    result.status = SearchStatus::Found;
    result.iso = std::move(search.found);
  } else if (search.out_of_budget) {
    result.status = SearchStatus::Unknown;
  } else {
    result.status = SearchStatus::NotIsomorphic;
    result.obstruction = "exhaustive search found no isomorphism";
  }
  return result;
}

}  // namespace meadows
