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

#include "meadows/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace meadows {

FiniteLattice FiniteLattice::from_leq(std::size_t size,
                                      const std::function<bool(Vertex, Vertex)>& leq) {
  if (size == 0) throw std::invalid_argument("lattice must be nonempty");

  FiniteLattice l;
  l.size_ = size;
  l.leq_.assign(size * size, false);
  for (Vertex a = 0; a < size; ++a)
    for (Vertex b = 0; b < size; ++b) l.leq_[a * size + b] = leq(a, b);

  for (Vertex a = 0; a < size; ++a) {
    if (!l.leq(a, a)) throw std::invalid_argument("order is not reflexive");
    for (Vertex b = 0; b < size; ++b) {
      if (a != b && l.leq(a, b) && l.leq(b, a))
        throw std::invalid_argument("order is not antisymmetric");
      for (Vertex c = 0; c < size; ++c)
        if (l.leq(a, b) && l.leq(b, c) && !l.leq(a, c))
          throw std::invalid_argument("order is not transitive");
    }
  }

  l.meet_.assign(size * size, 0);
  l.join_.assign(size * size, 0);
  for (Vertex a = 0; a < size; ++a) {
    for (Vertex b = 0; b < size; ++b) {
      // greatest lower bound: a lower bound above every lower bound
      bool found_meet = false, found_join = false;
      for (Vertex m = 0; m < size; ++m) {
        if (l.leq(m, a) && l.leq(m, b)) {
          bool greatest = true;
          for (Vertex x = 0; x < size; ++x)
            if (l.leq(x, a) && l.leq(x, b) && !l.leq(x, m)) {
              greatest = false;
              break;
            }
          if (greatest) {
            l.meet_[a * size + b] = m;
            found_meet = true;
            break;
          }
        }
      }
      for (Vertex j = 0; j < size; ++j) {
        if (l.leq(a, j) && l.leq(b, j)) {
          bool least = true;
          for (Vertex x = 0; x < size; ++x)
            if (l.leq(a, x) && l.leq(b, x) && !l.leq(j, x)) {
              least = false;
              break;
            }
          if (least) {
            l.join_[a * size + b] = j;
            found_join = true;
            break;
          }
        }
      }
      if (!found_meet || !found_join)
        throw std::invalid_argument("order has a pair without meet or join");
    }
  }

  bool have_top = false, have_bottom = false;
  for (Vertex v = 0; v < size; ++v) {
    bool is_top = true, is_bottom = true;
    for (Vertex w = 0; w < size; ++w) {
      is_top = is_top && l.leq(w, v);
      is_bottom = is_bottom && l.leq(v, w);
    }
    if (is_top) {
      l.top_ = v;
      have_top = true;
    }
    if (is_bottom) {
      l.bottom_ = v;
      have_bottom = true;
    }
  }
  if (!have_top || !have_bottom)
    throw std::invalid_argument("lattice must be bounded");
  return l;
}

std::vector<Vertex> FiniteLattice::atoms() const {
  std::vector<Vertex> out;
  for (Vertex a = 0; a < size_; ++a) {
    if (a == bottom_) continue;
    bool atom = true;
    for (Vertex x = 0; x < size_; ++x) {
      if (x != bottom_ && x != a && leq(x, a)) {
        atom = false;
        break;
      }
    }
    if (atom) out.push_back(a);
  }
  return out;
}

bool FiniteLattice::is_atomic() const {
  const auto as = atoms();
  for (Vertex x = 0; x < size_; ++x) {
    if (x == bottom_) continue;
    const bool covered = std::any_of(as.begin(), as.end(),
                                     [&](Vertex a) { return leq(a, x); });
    if (!covered) return false;
  }
  return true;
}

std::vector<std::pair<Vertex, Vertex>> FiniteLattice::hasse_edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex lo = 0; lo < size_; ++lo) {
    for (Vertex hi = 0; hi < size_; ++hi) {
      if (lo == hi || !leq(lo, hi)) continue;
      bool cover = true;
      for (Vertex mid = 0; mid < size_; ++mid) {
        if (mid != lo && mid != hi && leq(lo, mid) && leq(mid, hi)) {
          cover = false;
          break;
        }
      }
      if (cover) out.emplace_back(lo, hi);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticeReport validate_lattice(const FiniteLattice& l) {
  LatticeReport report;
  auto check = [&](const std::string& prop, bool ok, const std::string& detail) {
    report.checks.push_back({prop, ok, ok ? "" : detail});
  };
  const std::size_t n = l.size();

  bool refl = true, antisym = true, trans = true;
  for (Vertex a = 0; a < n; ++a) {
    refl = refl && l.leq(a, a);
    for (Vertex b = 0; b < n; ++b) {
      if (a != b && l.leq(a, b) && l.leq(b, a)) antisym = false;
      for (Vertex c = 0; c < n; ++c)
        if (l.leq(a, b) && l.leq(b, c) && !l.leq(a, c)) trans = false;
    }
  }
  check("reflexive", refl, "leq(a,a) fails");
  check("antisymmetric", antisym, "two-cycle in leq");
  check("transitive", trans, "missing transitive edge");

  bool meet_glb = true, join_lub = true;
  for (Vertex a = 0; a < n && (meet_glb || join_lub); ++a) {
    for (Vertex b = 0; b < n; ++b) {
      const Vertex m = l.meet(a, b), j = l.join(a, b);
      if (!l.leq(m, a) || !l.leq(m, b)) meet_glb = false;
      if (!l.leq(a, j) || !l.leq(b, j)) join_lub = false;
      for (Vertex x = 0; x < n; ++x) {
        if (l.leq(x, a) && l.leq(x, b) && !l.leq(x, m)) meet_glb = false;
        if (l.leq(a, x) && l.leq(b, x) && !l.leq(j, x)) join_lub = false;
      }
    }
  }
  check("meet-is-glb", meet_glb, "meet table disagrees with order");
  check("join-is-lub", join_lub, "join table disagrees with order");

  bool bounds = true;
  for (Vertex v = 0; v < n; ++v)
    bounds = bounds && l.leq(v, l.top()) && l.leq(l.bottom(), v);
  check("bounded", bounds, "top/bottom not extreme");

  bool absorb = true;
  for (Vertex a = 0; a < n && absorb; ++a)
    for (Vertex b = 0; b < n; ++b) {
      if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) {
        absorb = false;
        break;
      }
    }
  check("absorption", absorb, "meet/join absorption fails");

  bool idem_comm = true;
  for (Vertex a = 0; a < n && idem_comm; ++a) {
    if (l.meet(a, a) != a || l.join(a, a) != a) idem_comm = false;
    for (Vertex b = 0; b < n; ++b)
      if (l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a))
        idem_comm = false;
  }
  check("idempotent-commutative", idem_comm, "meet/join not idempotent-commutative");

  report.all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const LatticeCheck& c) { return c.passed; });
  return report;
}

FiniteLattice lattice_from_ideals(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("no ideals given");

  // closure under sum and intersection is a precondition; verify it
  auto find = [&](const Ideal& target) -> int {
    for (std::size_t k = 0; k < ideals.size(); ++k)
      if (ideals[k] == target) return static_cast<int>(k);
    return -1;
  };
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    for (std::size_t b = a + 1; b < ideals.size(); ++b) {
      if (find(ideal_sum(ideals[a], ideals[b])) < 0 ||
          find(ideal_intersection(ideals[a], ideals[b])) < 0)
        throw std::invalid_argument(
            "ideal list is not closed under sum/intersection");
    }
  }

  // reverse inclusion: the larger ideal is the smaller lattice element
  return FiniteLattice::from_leq(ideals.size(), [&](Vertex a, Vertex b) {
    return ideals[b].subset_of(ideals[a]);
  });
}

FiniteLattice product_lattice(const FiniteLattice& l1, const FiniteLattice& l2) {
  return product_lattice(std::vector<const FiniteLattice*>{&l1, &l2});
}

FiniteLattice product_lattice(const std::vector<const FiniteLattice*>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty lattice product");
  std::size_t size = 1;
  for (const auto* f : factors) size *= f->size();

  const std::size_t k = factors.size();
  auto decode = [&](Vertex v) {
    std::vector<Vertex> c(k);
    std::size_t rest = v;
    for (std::size_t i = k; i-- > 0;) {
      c[i] = static_cast<Vertex>(rest % factors[i]->size());
      rest /= factors[i]->size();
    }
    return c;
  };

  return FiniteLattice::from_leq(size, [&](Vertex a, Vertex b) {
    const auto ca = decode(a), cb = decode(b);
    for (std::size_t i = 0; i < k; ++i)
      if (!factors[i]->leq(ca[i], cb[i])) return false;
    return true;
  });
}

std::string lattice_to_dot(const FiniteLattice& l,
                           const std::vector<std::string>& labels,
                           const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  rankdir=TB;\n  node [shape=plaintext];\n";
  for (Vertex v = 0; v < l.size(); ++v) {
    std::string label = v < labels.size() ? labels[v] : std::to_string(v);
    out << "  v" << v << " [label=\"" << label << "\"];\n";
  }
  // drawn top-down: arrows from the upper vertex to the one it covers
  for (const auto& [lo, hi] : l.hasse_edges())
    out << "  v" << hi << " -> v" << lo << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace meadows
