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

#include "meadows/directed_lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace meadows {

DirectedLattice DirectedLattice::build(FiniteLattice lattice,
                                       std::vector<RingPtr> rings,
                                       const std::vector<EdgeHom>& edge_homs) {
  const std::size_t n = lattice.size();
  if (rings.size() != n)
    throw std::invalid_argument("one ring per lattice vertex required");
  if (!rings[lattice.bottom()]->is_zero_ring())
    throw std::invalid_argument("the bottom vertex must carry the zero ring");
  for (Vertex v = 0; v < n; ++v) {
    if (v != lattice.bottom() && rings[v]->order() < 2)
      throw std::invalid_argument(
          "vertex " + std::to_string(v) +
          " must carry a unital ring of order >= 2 (only the bottom is the zero ring)");
  }

  const auto covers = lattice.hasse_edges();
  std::map<std::pair<Vertex, Vertex>, const EdgeHom*> by_edge;
  for (const auto& e : edge_homs) {
    if (e.lower >= n || e.upper >= n)
      throw std::invalid_argument("edge hom names an unknown vertex");
    if (!by_edge.emplace(std::make_pair(e.lower, e.upper), &e).second)
      throw std::invalid_argument("duplicate hom for edge (" +
                                  std::to_string(e.lower) + ", " +
                                  std::to_string(e.upper) + ")");
  }
  if (by_edge.size() != covers.size() ||
      !std::all_of(covers.begin(), covers.end(), [&](const auto& c) {
        return by_edge.count({c.first, c.second}) > 0;
      }))
    throw std::invalid_argument(
        "edge homs must be given for exactly the covering pairs of the lattice");

  DirectedLattice dl;
  dl.lattice_ = std::move(lattice);
  dl.rings_ = std::move(rings);
  dl.transitions_.assign(n * n, std::nullopt);

  for (Vertex v = 0; v < n; ++v)
    dl.transitions_[v * n + v] = RingHom::identity(dl.rings_[v]);

  for (const auto& [lo, hi] : covers) {
    const EdgeHom& e = *by_edge.at({lo, hi});
    std::vector<Index> map;
    if (e.map.has_value()) {
      map = *e.map;
    } else if (dl.rings_[lo]->is_zero_ring()) {
      map.assign(dl.rings_[hi]->order(), dl.rings_[lo]->zero());
    } else {
      throw std::invalid_argument(
          "edge (" + std::to_string(lo) + ", " + std::to_string(hi) +
          "): the map may be omitted only when the lower ring is the zero ring");
    }
    // RingHom construction verifies the homomorphism laws
    dl.transitions_[lo * n + hi] = RingHom(dl.rings_[hi], dl.rings_[lo], std::move(map));
  }

  // fill all comparable pairs along canonical cover chains
  std::function<const RingHom&(Vertex, Vertex)> fill = [&](Vertex lo,
                                                           Vertex hi) -> const RingHom& {
    auto& slot = dl.transitions_[lo * n + hi];
    if (slot.has_value()) return *slot;
    // step down from hi through its least cover that stays above lo
    for (const auto& [clo, chi] : covers) {
      if (chi != hi || !dl.lattice_.leq(lo, clo)) continue;
      const RingHom& step = *dl.transitions_[clo * n + hi];
      const RingHom& rest = fill(lo, clo);
      slot = rest.after(step);
      return *slot;
    }
    throw std::logic_error("no covering step found in a finite lattice interval");
  };
  for (Vertex lo = 0; lo < n; ++lo)
    for (Vertex hi = 0; hi < n; ++hi)
      if (lo != hi && dl.lattice_.leq(lo, hi)) fill(lo, hi);

  // coherence: composition along every comparable triple agrees pointwise,
  // which is equivalent to path-independence
  for (Vertex lo = 0; lo < n; ++lo) {
    for (Vertex mid = 0; mid < n; ++mid) {
      if (lo == mid || !dl.lattice_.leq(lo, mid)) continue;
      for (Vertex hi = 0; hi < n; ++hi) {
        if (mid == hi || !dl.lattice_.leq(mid, hi)) continue;
        const RingHom& f_lo_mid = *dl.transitions_[lo * n + mid];
        const RingHom& f_mid_hi = *dl.transitions_[mid * n + hi];
        const RingHom& f_lo_hi = *dl.transitions_[lo * n + hi];
        for (Index x = 0; x < dl.rings_[hi]->order(); ++x) {
          if (f_lo_mid(f_mid_hi(x)) != f_lo_hi(x)) {
            std::ostringstream msg;
            msg << "coherence violation between vertices " << hi << " and " << lo
                << ": composing through vertex " << mid << " sends "
                << dl.rings_[hi]->element_name(x) << " to "
                << dl.rings_[lo]->element_name(f_lo_mid(f_mid_hi(x)))
                << " but the direct transition gives "
                << dl.rings_[lo]->element_name(f_lo_hi(x));
            throw CoherenceError(msg.str());
          }
        }
      }
    }
  }

  return dl;
}

const RingHom& DirectedLattice::transition(Vertex lower, Vertex upper) const {
  const std::size_t n = lattice_.size();
  if (lower >= n || upper >= n || !lattice_.leq(lower, upper))
    throw std::invalid_argument("transition requires comparable vertices (lower <= upper)");
  return *transitions_[lower * n + upper];
}

}  // namespace meadows
