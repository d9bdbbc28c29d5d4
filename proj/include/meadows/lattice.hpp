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

#ifndef MEADOWS_LATTICE_HPP
#define MEADOWS_LATTICE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "meadows/common.hpp"
#include "meadows/ideal.hpp"

namespace meadows {

/**
  A finite bounded lattice over dense vertex ids. The order relation is a
  materialized bit matrix; meet and join tables are derived from it at
  construction, so queries are O(1).
*/
class FiniteLattice {
 public:
  /// Empty until assigned from from_leq().
  FiniteLattice() = default;

  /// Builds from an order relation given as a predicate on vertex ids.
  /// Verifies it is a partial order with total meets and joins.
  static FiniteLattice from_leq(std::size_t size,
                                const std::function<bool(Vertex, Vertex)>& leq);

  std::size_t size() const { return size_; }
  Vertex top() const { return top_; }
  Vertex bottom() const { return bottom_; }
  bool leq(Vertex a, Vertex b) const { return leq_[a * size_ + b]; }
  Vertex meet(Vertex a, Vertex b) const { return meet_[a * size_ + b]; }
  Vertex join(Vertex a, Vertex b) const { return join_[a * size_ + b]; }

  /// Vertices covering bottom (nothing strictly between).
  std::vector<Vertex> atoms() const;
  /// Every vertex except bottom sits above an atom. Always true for a
  /// finite bounded lattice; kept for interface parity with infinite
  /// carriers where it can fail.
  bool is_atomic() const;
  /// Covering relation as (lower, upper) pairs, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> hasse_edges() const;

 private:
  std::size_t size_ = 0;
  Vertex top_ = 0, bottom_ = 0;
  std::vector<bool> leq_;
  std::vector<Vertex> meet_, join_;
};

struct LatticeCheck {
  std::string property;
  bool passed = false;
  std::string detail;
};

struct LatticeReport {
  bool all_passed = false;
  std::vector<LatticeCheck> checks;
};

/// Re-derives every FiniteLattice invariant from scratch: partial order
/// laws, meet/join as glb/lub, bounds, and the absorption identities.
LatticeReport validate_lattice(const FiniteLattice& l);

/**
  The lattice of an ideal list under REVERSE inclusion: a larger ideal is a
  smaller lattice element, so meet = ideal sum and join = intersection; top
  is the zero ideal and bottom the unit ideal. Vertex i corresponds to
  ideals[i]. The list must be closed under sum and intersection, as
  enumerate_ideals guarantees.
*/
FiniteLattice lattice_from_ideals(const std::vector<Ideal>& ideals);

/// Componentwise order on pairs; vertex (a, b) has id a * l2.size() + b.
FiniteLattice product_lattice(const FiniteLattice& l1, const FiniteLattice& l2);

/// N-ary version; vertex ids are mixed-radix, first factor most significant.
FiniteLattice product_lattice(const std::vector<const FiniteLattice*>& factors);

/// DOT rendering, top-down as in Hasse diagrams; labels[v] names vertex v.
std::string lattice_to_dot(const FiniteLattice& l,
                           const std::vector<std::string>& labels,
                           const std::string& graph_name = "lattice");

}  // namespace meadows

#endif
