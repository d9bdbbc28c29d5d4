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

#ifndef MEADOWS_DIRECTED_LATTICE_HPP
#define MEADOWS_DIRECTED_LATTICE_HPP

#include <optional>
#include <vector>

#include "meadows/finite_ring.hpp"
#include "meadows/lattice.hpp"

namespace meadows {

/// Input transition for one Hasse edge: a map from the upper vertex ring
/// down to the lower vertex ring. The map may be omitted only when the
/// lower ring is the zero ring, where it is forced.
struct EdgeHom {
  Vertex lower = 0;
  Vertex upper = 0;
  std::optional<std::vector<Index>> map;
};

/**
  A finite lattice whose vertices carry rings and whose comparabilities
  carry coherent transition homomorphisms pointing downward. The bottom
  vertex carries the zero ring; every other vertex carries a ring of
  order >= 2.

  Transitions are supplied on Hasse edges only. Construction composes them
  along canonical paths to all comparable pairs and then checks coherence
  f(i,j) o f(j,k) = f(i,k) pointwise over every chain i < j < k, which is
  equivalent to path-independence. Violations raise CoherenceError naming
  the offending pair.
*/
class DirectedLattice {
 public:
  /// Empty until assigned from build().
  DirectedLattice() = default;

  static DirectedLattice build(FiniteLattice lattice, std::vector<RingPtr> rings,
                               const std::vector<EdgeHom>& edge_homs);

  const FiniteLattice& lattice() const { return lattice_; }
  const RingPtr& ring_at(Vertex v) const { return rings_[v]; }
  std::size_t vertex_count() const { return rings_.size(); }

  /// f_{lower,upper}: ring_at(upper) -> ring_at(lower); requires
  /// leq(lower, upper). f_{v,v} is the identity.
  const RingHom& transition(Vertex lower, Vertex upper) const;

 private:
  FiniteLattice lattice_;
  std::vector<RingPtr> rings_;
  // dense (lower, upper) -> hom table for all comparable pairs,
  // filled during the build-time coherence pass
  std::vector<std::optional<RingHom>> transitions_;
};

}  // namespace meadows

#endif
