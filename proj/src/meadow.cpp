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

#include "meadows/meadow.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace meadows {

// ---- construction -----------------------------------------------------------

MeadowPtr Meadow::create(DirectedLattice dl, std::optional<RingProvenance> provenance) {
  if (dl.ring_at(dl.lattice().top())->is_zero_ring())
    throw std::invalid_argument(
        "the top vertex must carry a unital ring; the smallest meadow is a "
        "2-chain with a field above the zero ring");

  auto m = std::shared_ptr<Meadow>(new Meadow());
  m->dl_ = std::move(dl);
  m->mr_ = std::move(provenance);

  const std::size_t n = m->dl_.vertex_count();
  m->offsets_.assign(n, 0);
  std::size_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    m->offsets_[v] = total;
    total += m->dl_.ring_at(v)->order();
  }
  m->carrier_size_ = total;

  m->labels_.assign(n, "");
  for (Vertex v = 0; v < n; ++v) {
    if (v == m->lattice().bottom()) {
      m->labels_[v] = "{a}";
    } else if (m->mr_) {
      m->labels_[v] = m->mr_->base_ring->name() + "/" + m->mr_->ideals[v].label();
    } else {
      m->labels_[v] = m->dl_.ring_at(v)->name();
    }
  }

  m->unit_masks_.resize(n);
  for (Vertex v = 0; v < n; ++v) m->unit_masks_[v] = unit_mask(*m->dl_.ring_at(v));

  // greatest-element criterion, decided once per element
  m->greatest_invertible_.assign(total, 0);
  for (Vertex v = 0; v < n && !m->witness_; ++v) {
    const std::size_t fiber = m->dl_.ring_at(v)->order();
    for (Index i = 0; i < fiber; ++i) {
      std::vector<Vertex> inv_at;
      for (Vertex j = 0; j < n; ++j) {
        if (!m->lattice().leq(j, v)) continue;
        if (m->unit_masks_[j][m->dl_.transition(j, v)(i)]) inv_at.push_back(j);
      }
      std::vector<Vertex> maximal;
      for (Vertex j : inv_at) {
        bool is_max = true;
        for (Vertex k : inv_at)
          if (k != j && m->lattice().leq(j, k)) {
            is_max = false;
            break;
          }
        if (is_max) maximal.push_back(j);
      }
      if (maximal.size() == 1) {
        m->greatest_invertible_[m->offsets_[v] + i] = maximal.front();
      } else {
        m->witness_ = CommonalityWitness{v, i, maximal};
        break;
      }
    }
  }
  return m;
}

// ---- element plumbing ---------------------------------------------------------

void Meadow::require_mine(const Element& x) const {
  if (x.owner != this)
    throw std::invalid_argument("element belongs to a different meadow");
  if (x.vertex >= vertex_count() || x.index >= fiber_ring(x.vertex)->order())
    throw std::invalid_argument("element out of range");
}

Meadow::Element Meadow::element(Vertex v, Index i) const {
  Element e{this, v, i};
  require_mine(e);
  return e;
}

Meadow::Element Meadow::absorbent() const {
  return {this, lattice().bottom(), fiber_ring(lattice().bottom())->zero()};
}

Meadow::Element Meadow::from_global(std::size_t id) const {
  if (id >= carrier_size_) throw std::invalid_argument("global id out of range");
  Vertex v = 0;
  for (Vertex w = 0; w < vertex_count(); ++w)
    if (offsets_[w] <= id) v = w;
  return {this, v, static_cast<Index>(id - offsets_[v])};
}

Meadow::Element Meadow::push_down(Element x, Vertex v) const {
  require_mine(x);
  return {this, v, dl_.transition(v, x.vertex)(x.index)};
}

Meadow::Element Meadow::add(Element x, Element y) const {
  require_mine(x);
  require_mine(y);
  const Vertex m = lattice().meet(x.vertex, y.vertex);
  const Index a = dl_.transition(m, x.vertex)(x.index);
  const Index b = dl_.transition(m, y.vertex)(y.index);
  return {this, m, fiber_ring(m)->add(a, b)};
}

Meadow::Element Meadow::mul(Element x, Element y) const {
  require_mine(x);
  require_mine(y);
  const Vertex m = lattice().meet(x.vertex, y.vertex);
  const Index a = dl_.transition(m, x.vertex)(x.index);
  const Index b = dl_.transition(m, y.vertex)(y.index);
  return {this, m, fiber_ring(m)->mul(a, b)};
}

Meadow::Element Meadow::neg(Element x) const {
  require_mine(x);
  return {this, x.vertex, fiber_ring(x.vertex)->neg(x.index)};
}

Meadow::Element Meadow::zero_of(Element x) const {
  require_mine(x);
  return {this, x.vertex, fiber_ring(x.vertex)->zero()};
}

Meadow::Element Meadow::inv(Element x) const {
  require_mine(x);
  if (witness_) {
    const auto& w = *witness_;
    std::ostringstream msg;
    msg << "inverse refused: not a common meadow; element "
        << fiber_ring(w.vertex)->element_name(w.index) << " at vertex "
        << vertex_label(w.vertex) << " has " << w.maximal_vertices.size()
        << " maximal invertibility vertices";
    throw NotCommonError(msg.str());
  }
  const Vertex best = greatest_invertible_[global_id(x)];
  const Index image = dl_.transition(best, x.vertex)(x.index);
  return {this, best, unit_inverse(*fiber_ring(best), image)};
}

bool Meadow::order_leq(Element z, Element zp) const {
  require_mine(z);
  require_mine(zp);
  if (z.index != fiber_ring(z.vertex)->zero() ||
      zp.index != fiber_ring(zp.vertex)->zero())
    throw std::invalid_argument("order_leq is defined on fiber zeros only");
  return mul(z, zp) == z;
}

std::vector<Vertex> Meadow::invertibility_set(Element x) const {
  require_mine(x);
  std::vector<Vertex> out;
  for (Vertex j = 0; j < vertex_count(); ++j) {
    if (!lattice().leq(j, x.vertex)) continue;
    if (unit_masks_[j][dl_.transition(j, x.vertex)(x.index)]) out.push_back(j);
  }
  return out;
}

std::string Meadow::element_name(Element x) const {
  require_mine(x);
  if (x.vertex == lattice().bottom()) return "a";
  return fiber_ring(x.vertex)->element_name(x.index);
}

std::string Meadow::vertex_label(Vertex v) const {
  if (v >= vertex_count()) throw std::invalid_argument("vertex out of range");
  return labels_[v];
}

// ---- locality -------------------------------------------------------------------

bool Meadow::is_local() const {
  const Element a = absorbent();
  bool by_definition = true;
  for (std::size_t i = 0; i < carrier_size_ && by_definition; ++i) {
    const Element x = from_global(i);
    for (std::size_t j = 0; j < carrier_size_; ++j) {
      const Element y = from_global(j);
      if (add(x, y) == a && x != a && y != a) {
        by_definition = false;
        break;
      }
    }
  }
  const bool by_atoms = atoms().size() == 1;
  if (by_definition != by_atoms)
    throw std::logic_error(
        "locality definition and unique-atom criterion disagree");
  return by_definition;
}

// ---- axiom sweeps ----------------------------------------------------------------

namespace {

// dense view of the meadow operations; tables only in exhaustive mode
struct DenseOps {
  const Meadow& m;
  std::size_t n;
  bool tabled = false;
  std::vector<std::uint32_t> add_t, mul_t, neg_t, zof_t;

  explicit DenseOps(const Meadow& meadow, bool materialize)
      : m(meadow), n(meadow.carrier_size()) {
    if (!materialize) return;
    tabled = true;
    add_t.resize(n * n);
    mul_t.resize(n * n);
    neg_t.resize(n);
    zof_t.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = m.from_global(i);
      neg_t[i] = static_cast<std::uint32_t>(m.global_id(m.neg(x)));
      zof_t[i] = static_cast<std::uint32_t>(m.global_id(m.zero_of(x)));
      for (std::size_t j = 0; j < n; ++j) {
        const auto y = m.from_global(j);
        add_t[i * n + j] = static_cast<std::uint32_t>(m.global_id(m.add(x, y)));
        mul_t[i * n + j] = static_cast<std::uint32_t>(m.global_id(m.mul(x, y)));
      }
    }
  }

  std::size_t add(std::size_t i, std::size_t j) const {
    return tabled ? add_t[i * n + j]
                  : m.global_id(m.add(m.from_global(i), m.from_global(j)));
  }
  std::size_t mul(std::size_t i, std::size_t j) const {
    return tabled ? mul_t[i * n + j]
                  : m.global_id(m.mul(m.from_global(i), m.from_global(j)));
  }
  std::size_t neg(std::size_t i) const {
    return tabled ? neg_t[i] : m.global_id(m.neg(m.from_global(i)));
  }
  std::size_t zero_of(std::size_t i) const {
    return tabled ? zof_t[i] : m.global_id(m.zero_of(m.from_global(i)));
  }
};

std::string describe(const Meadow& m, std::size_t id) {
  const auto e = m.from_global(id);
  return m.element_name(e) + " at " + m.vertex_label(e.vertex);
}

struct SweepEngine {
  const Meadow& m;
  DenseOps ops;
  bool sampled;
  std::size_t samples;
  std::uint64_t seed;
  AxiomReport& report;

  SweepEngine(const Meadow& meadow, const CheckOptions& opts, AxiomReport& rep)
      : m(meadow),
        ops(meadow, !(opts.force_sampled || meadow.carrier_size() > opts.exhaustive_cap)),
        sampled(opts.force_sampled || meadow.carrier_size() > opts.exhaustive_cap),
        samples(opts.samples),
        seed(opts.seed),
        report(rep) {}

  template <typename Fn>
  void run(const std::string& axiom, const std::string& statement, int arity, Fn&& fn) {
    const std::size_t n = m.carrier_size();
    AxiomResult res;
    res.axiom = axiom;
    res.statement = statement;
    std::optional<std::array<std::size_t, 3>> bad;

    if (arity == 1) {
      res.cases = n;
      for (std::size_t x = 0; x < n && !bad; ++x)
        if (!fn(x, 0, 0)) bad = {x, 0, 0};
    } else if (!sampled) {
      res.cases = arity == 2 ? n * n : n * n * n;
      if (arity == 2) {
        for (std::size_t x = 0; x < n && !bad; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (!fn(x, y, 0)) {
              bad = {x, y, 0};
              break;
            }
      } else {
        for (std::size_t x = 0; x < n && !bad; ++x)
          for (std::size_t y = 0; y < n && !bad; ++y)
            for (std::size_t z = 0; z < n; ++z)
              if (!fn(x, y, z)) {
                bad = {x, y, z};
                break;
              }
      }
    } else {
      res.cases = samples;
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t s = 0; s < samples && !bad; ++s) {
        const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
        if (!fn(x, arity >= 2 ? y : 0, arity >= 3 ? z : 0))
          bad = {x, y, z};
      }
    }

    res.passed = !bad.has_value();
    if (bad) {
      std::ostringstream os;
      os << "x = " << describe(m, (*bad)[0]);
      if (arity >= 2) os << ", y = " << describe(m, (*bad)[1]);
      if (arity >= 3) os << ", z = " << describe(m, (*bad)[2]);
      res.counterexample = os.str();
    }
    report.results.push_back(std::move(res));
  }
};

}  // namespace

AxiomReport Meadow::check_pre_meadow(const CheckOptions& opts) const {
  AxiomReport report;
  report.sampled = opts.force_sampled || carrier_size_ > opts.exhaustive_cap;
  report.seed = opts.seed;

  SweepEngine eng(*this, opts, report);
  const std::size_t zero_id = global_id(zero());
  const std::size_t one_id = global_id(one());
  const std::size_t a_id = global_id(absorbent());
  const auto& ops = eng.ops;

  eng.run("P1", "(x+y)+z = x+(y+z)", 3, [&](std::size_t x, std::size_t y, std::size_t z) {
    return ops.add(ops.add(x, y), z) == ops.add(x, ops.add(y, z));
  });
  eng.run("P2", "x+y = y+x", 2, [&](std::size_t x, std::size_t y, std::size_t) {
    return ops.add(x, y) == ops.add(y, x);
  });
  eng.run("P3", "x+0 = x", 1, [&](std::size_t x, std::size_t, std::size_t) {
    return ops.add(x, zero_id) == x;
  });
  eng.run("P4", "x+(-x) = 0*x", 1, [&](std::size_t x, std::size_t, std::size_t) {
    return ops.add(x, ops.neg(x)) == ops.mul(zero_id, x);
  });
  eng.run("P5", "(x*y)*z = x*(y*z)", 3, [&](std::size_t x, std::size_t y, std::size_t z) {
    return ops.mul(ops.mul(x, y), z) == ops.mul(x, ops.mul(y, z));
  });
  eng.run("P6", "x*y = y*x", 2, [&](std::size_t x, std::size_t y, std::size_t) {
    return ops.mul(x, y) == ops.mul(y, x);
  });
  eng.run("P7", "1*x = x", 1, [&](std::size_t x, std::size_t, std::size_t) {
    return ops.mul(one_id, x) == x;
  });
  eng.run("P8", "x*(y+z) = x*y + x*z", 3, [&](std::size_t x, std::size_t y, std::size_t z) {
    return ops.mul(x, ops.add(y, z)) == ops.add(ops.mul(x, y), ops.mul(x, z));
  });
  eng.run("P9", "-(-x) = x", 1, [&](std::size_t x, std::size_t, std::size_t) {
    return ops.neg(ops.neg(x)) == x;
  });
  eng.run("P10", "0*(x+y) = 0*x*y", 2, [&](std::size_t x, std::size_t y, std::size_t) {
    return ops.mul(zero_id, ops.add(x, y)) == ops.mul(ops.mul(zero_id, x), y);
  });

  // structural conditions of a pre-meadow with a
  {
    AxiomResult res;
    res.axiom = "fiber-a";
    res.statement = "exactly one fiber is a singleton, at the bottom";
    res.cases = vertex_count();
    std::size_t singletons = 0;
    bool bottom_single = false;
    for (Vertex v = 0; v < vertex_count(); ++v) {
      if (fiber_ring(v)->order() == 1) {
        ++singletons;
        if (v == lattice().bottom()) bottom_single = true;
      }
    }
    res.passed = singletons == 1 && bottom_single;
    if (!res.passed) res.counterexample = std::to_string(singletons) + " singleton fibers";
    report.results.push_back(std::move(res));
  }
  eng.run("absorb-add", "x+a = a", 1, [&](std::size_t x, std::size_t, std::size_t) {
    return ops.add(x, a_id) == a_id;
  });
  eng.run("absorb-mul", "x*a = a", 1, [&](std::size_t x, std::size_t, std::size_t) {
    return ops.mul(x, a_id) == a_id;
  });

  report.all_passed = std::all_of(report.results.begin(), report.results.end(),
                                  [](const AxiomResult& r) { return r.passed; });
  return report;
}

AxiomReport Meadow::check_common(const CheckOptions& opts) const {
  AxiomReport report;
  report.sampled = opts.force_sampled || carrier_size_ > opts.exhaustive_cap;
  report.seed = opts.seed;

  if (witness_) {
    AxiomResult res;
    res.axiom = "common";
    res.statement = "every invertibility set has a greatest element";
    res.cases = carrier_size_;
    res.passed = false;
    std::ostringstream os;
    os << "x = " << fiber_ring(witness_->vertex)->element_name(witness_->index)
       << " at " << vertex_label(witness_->vertex) << " has maximal vertices {";
    for (std::size_t k = 0; k < witness_->maximal_vertices.size(); ++k)
      os << (k ? ", " : "") << vertex_label(witness_->maximal_vertices[k]);
    os << "}";
    res.counterexample = os.str();
    report.results.push_back(std::move(res));
    report.all_passed = false;
    return report;
  }

  SweepEngine eng(*this, opts, report);
  const std::size_t zero_id = global_id(zero());
  const std::size_t one_id = global_id(one());
  const std::size_t a_id = global_id(absorbent());
  const auto& ops = eng.ops;

  // inverse on global ids
  std::vector<std::size_t> inv_t(carrier_size_);
  for (std::size_t i = 0; i < carrier_size_; ++i)
    inv_t[i] = global_id(inv(from_global(i)));

  eng.run("M1", "x*inv(x) = 1 + 0*inv(x)", 1, [&](std::size_t x, std::size_t, std::size_t) {
    return ops.mul(x, inv_t[x]) == ops.add(one_id, ops.mul(zero_id, inv_t[x]));
  });
  eng.run("M2", "inv(x*y) = inv(x)*inv(y)", 2, [&](std::size_t x, std::size_t y, std::size_t) {
    return inv_t[ops.mul(x, y)] == ops.mul(inv_t[x], inv_t[y]);
  });
  eng.run("M3", "inv(1 + 0*x) = 1 + 0*x", 1, [&](std::size_t x, std::size_t, std::size_t) {
    const std::size_t u = ops.add(one_id, ops.mul(zero_id, x));
    return inv_t[u] == u;
  });
  eng.run("M4", "inv(0) = a", 1, [&](std::size_t, std::size_t, std::size_t) {
    return inv_t[zero_id] == a_id;
  });

  report.all_passed = std::all_of(report.results.begin(), report.results.end(),
                                  [](const AxiomResult& r) { return r.passed; });
  return report;
}

// ---- maps -----------------------------------------------------------------------

Meadow::Element MeadowMap::apply(const Meadow::Element& x) const {
  return target->from_global(map[source->global_id(x)]);
}

MapReport check_meadow_hom(const MeadowMap& f) {
  MapReport report;
  auto check = [&](const std::string& prop, bool ok, const std::string& cex) {
    report.checks.push_back({prop, ok, ok ? "" : cex});
  };

  const Meadow& src = *f.source;
  const Meadow& dst = *f.target;
  const std::size_t n = src.carrier_size();
  bool well_formed = f.map.size() == n &&
                     std::all_of(f.map.begin(), f.map.end(), [&](std::size_t v) {
                       return v < dst.carrier_size();
                     });
  check("total-map", well_formed, "map does not cover the carrier");
  if (!well_formed) {
    report.all_passed = false;
    return report;
  }

  check("preserves-one", f.map[src.global_id(src.one())] == dst.global_id(dst.one()),
        "f(1) != 1");

  bool add_ok = true, mul_ok = true;
  std::string add_cex, mul_cex;
  for (std::size_t i = 0; i < n && (add_ok || mul_ok); ++i) {
    const auto x = src.from_global(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto y = src.from_global(j);
      if (add_ok) {
        const std::size_t lhs = f.map[src.global_id(src.add(x, y))];
        const std::size_t rhs =
            dst.global_id(dst.add(dst.from_global(f.map[i]), dst.from_global(f.map[j])));
        if (lhs != rhs) {
          add_ok = false;
          add_cex = "x = " + describe(src, i) + ", y = " + describe(src, j);
        }
      }
      if (mul_ok) {
        const std::size_t lhs = f.map[src.global_id(src.mul(x, y))];
        const std::size_t rhs =
            dst.global_id(dst.mul(dst.from_global(f.map[i]), dst.from_global(f.map[j])));
        if (lhs != rhs) {
          mul_ok = false;
          mul_cex = "x = " + describe(src, i) + ", y = " + describe(src, j);
        }
      }
    }
  }
  check("preserves-add", add_ok, add_cex);
  check("preserves-mul", mul_ok, mul_cex);

  report.all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const MapCheck& c) { return c.passed; });
  return report;
}

MapReport verify_meadow_iso(const MeadowMap& f) {
  MapReport report = check_meadow_hom(f);

  bool bijective = f.source->carrier_size() == f.target->carrier_size();
  if (bijective) {
    std::vector<bool> hit(f.target->carrier_size(), false);
    for (std::size_t v : f.map) {
      if (v >= hit.size() || hit[v]) {
        bijective = false;
        break;
      }
      hit[v] = true;
    }
  }
  report.checks.push_back({"bijective", bijective, bijective ? "" : "map is not a bijection"});
  report.all_passed = report.all_passed && bijective;
  return report;
}

// ---- transition-map laws -----------------------------------------------------------

MapReport check_transition_maps(const Meadow& m) {
  MapReport report;
  auto check = [&](const std::string& prop, bool ok, const std::string& cex) {
    report.checks.push_back({prop, ok, ok ? "" : cex});
  };

  const auto& lat = m.lattice();
  bool matches = true, hom_laws = true, coherent = true;
  std::string matches_cex, hom_cex, coh_cex;

  for (Vertex lo = 0; lo < m.vertex_count(); ++lo) {
    for (Vertex hi = 0; hi < m.vertex_count(); ++hi) {
      if (!lat.leq(lo, hi)) continue;
      const auto& ring_hi = *m.fiber_ring(hi);
      const auto z = m.zero_of(m.element(lo, 0));

      for (Index x = 0; x < ring_hi.order(); ++x) {
        const auto via_add = m.add(m.element(hi, x), z);
        const auto stored = m.push_down(m.element(hi, x), lo);
        if (via_add != stored && matches) {
          matches = false;
          matches_cex = "x + z disagrees with the stored transition at vertex pair (" +
                        m.vertex_label(lo) + ", " + m.vertex_label(hi) + ")";
        }
      }
      // ring homomorphism laws of x -> x + z, checked pointwise
      for (Index x = 0; x < ring_hi.order() && hom_laws; ++x) {
        for (Index y = 0; y < ring_hi.order(); ++y) {
          const auto fx = m.add(m.element(hi, x), z);
          const auto fy = m.add(m.element(hi, y), z);
          const auto fsum = m.add(m.element(hi, ring_hi.add(x, y)), z);
          const auto fprod = m.add(m.element(hi, ring_hi.mul(x, y)), z);
          if (m.add(fx, fy) != fsum || m.mul(fx, fy) != fprod) {
            hom_laws = false;
            hom_cex = "x -> x + z is not a homomorphism from " + m.vertex_label(hi) +
                      " to " + m.vertex_label(lo);
            break;
          }
        }
      }
      const auto one_hi = m.element(hi, ring_hi.one());
      if (hom_laws && m.add(one_hi, z) != m.element(lo, m.fiber_ring(lo)->one())) {
        hom_laws = false;
        hom_cex = "x -> x + z does not send 1 to 1 from " + m.vertex_label(hi) + " to " +
                  m.vertex_label(lo);
      }

      for (Vertex mid = 0; mid < m.vertex_count() && coherent; ++mid) {
        if (!lat.leq(lo, mid) || !lat.leq(mid, hi)) continue;
        const auto zm = m.zero_of(m.element(mid, 0));
        for (Index x = 0; x < ring_hi.order(); ++x) {
          const auto two_step = m.add(m.add(m.element(hi, x), zm), z);
          const auto one_step = m.add(m.element(hi, x), z);
          if (two_step != one_step) {
            coherent = false;
            coh_cex = "composition through " + m.vertex_label(mid) +
                      " differs on the pair (" + m.vertex_label(lo) + ", " +
                      m.vertex_label(hi) + ")";
            break;
          }
        }
      }
    }
  }

  check("transition-equals-add", matches, matches_cex);
  check("transition-hom-laws", hom_laws, hom_cex);
  check("transition-coherence", coherent, coh_cex);
  report.all_passed = matches && hom_laws && coherent;
  return report;
}

std::string meadow_to_dot(const Meadow& m, const std::string& graph_name) {
  return lattice_to_dot(m.lattice(), m.vertex_labels(), graph_name);
}

}  // namespace meadows
