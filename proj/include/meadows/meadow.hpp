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

#ifndef MEADOWS_MEADOW_HPP
#define MEADOWS_MEADOW_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "meadows/directed_lattice.hpp"
#include "meadows/ideal.hpp"

namespace meadows {

class Meadow;
using MeadowPtr = std::shared_ptr<const Meadow>;

/// Set when a meadow was built from a ring: vertex v carries R/ideals[v].
struct RingProvenance {
  RingPtr base_ring;
  std::vector<Ideal> ideals;          // canonical enumerate_ideals order
  std::vector<RingHom> projections;   // base_ring -> fiber ring, per vertex
};

struct CommonalityWitness {
  Vertex vertex = 0;   // vertex of the witness element
  Index index = 0;     // its fiber index
  std::vector<Vertex> maximal_vertices;  // >= 2 maximal elements of its set
};

struct AxiomResult {
  std::string axiom;  // "P1".."P10", "M1".."M4", or a structural condition
  std::string statement;
  bool passed = false;
  std::size_t cases = 0;
  std::string counterexample;  // rendered tuple, empty when passed
};

struct AxiomReport {
  bool all_passed = false;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::vector<AxiomResult> results;
};

struct CheckOptions {
  std::size_t exhaustive_cap = kExhaustiveCap;
  bool force_sampled = false;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
};

/**
  The disjoint union of the rings of a directed lattice, with totalized
  operations: both operands are pushed along the transitions to the meet of
  their vertices and combined there. The bottom fiber is the singleton
  absorbent element a; 0 and 1 live in the top fiber.

  Whether an inverse exists is decided once at construction by the
  greatest-element criterion: for each element x the set of vertices where
  x pushes down to a unit either has a greatest element everywhere (the
  meadow is common and inv() is total) or some element witnesses two
  maximal vertices. Construction itself never fails on a non-common input;
  only inv() does.
*/
class Meadow {
 public:
  struct Element {
    const Meadow* owner = nullptr;
    Vertex vertex = 0;
    Index index = 0;
    bool operator==(const Element& o) const {
      return owner == o.owner && vertex == o.vertex && index == o.index;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }
  };

  static MeadowPtr create(DirectedLattice dl,
                          std::optional<RingProvenance> provenance = {});

  const DirectedLattice& directed_lattice() const { return dl_; }
  const FiniteLattice& lattice() const { return dl_.lattice(); }
  const RingPtr& fiber_ring(Vertex v) const { return dl_.ring_at(v); }
  std::size_t vertex_count() const { return dl_.vertex_count(); }
  std::size_t carrier_size() const { return carrier_size_; }

  Element element(Vertex v, Index i) const;
  Element absorbent() const;  // the unique element of the bottom fiber
  Element zero() const { return {this, lattice().top(), fiber_ring(lattice().top())->zero()}; }
  Element one() const { return {this, lattice().top(), fiber_ring(lattice().top())->one()}; }

  Element add(Element x, Element y) const;
  Element mul(Element x, Element y) const;
  Element neg(Element x) const;
  /// 0*x without evaluating a product: the zero of x's fiber.
  Element zero_of(Element x) const;
  /// Total inverse; refuses with NotCommonError on a non-common meadow.
  Element inv(Element x) const;

  /// Push x down to a vertex v <= vertex(x).
  Element push_down(Element x, Vertex v) const;

  /// The order on fiber zeros: z <= z' iff z * z' = z. Arguments must be
  /// fiber zeros; agrees with the lattice order of the vertices.
  bool order_leq(Element z, Element zp) const;

  /// Vertices j <= vertex(x) where the image of x is a unit; always
  /// contains the bottom vertex. Sorted by vertex id.
  std::vector<Vertex> invertibility_set(Element x) const;

  bool is_common() const { return !witness_.has_value(); }
  /// Present exactly when the meadow is not common.
  const std::optional<CommonalityWitness>& non_common_witness() const { return witness_; }

  /// Exhaustive (or sampled) sweep of the ten pre-meadow axioms plus the
  /// structural conditions: unique singleton fiber and absorbency of a.
  AxiomReport check_pre_meadow(const CheckOptions& opts = {}) const;
  /// The four inverse axioms. On a non-common meadow the report contains a
  /// single failed greatest-element entry with the witness.
  AxiomReport check_common(const CheckOptions& opts = {}) const;

  /// x + y = a forces x = a or y = a. Checked both by definition over all
  /// pairs and by the unique-atom criterion; a disagreement would be an
  /// internal inconsistency and throws std::logic_error.
  bool is_local() const;
  /// Atoms of the fiber-zero lattice, as vertex ids.
  std::vector<Vertex> atoms() const { return lattice().atoms(); }

  // dense enumeration (vertex-major, then fiber index)
  std::size_t global_id(Element x) const { return offsets_[x.vertex] + x.index; }
  Element from_global(std::size_t id) const;

  std::string element_name(Element x) const;
  std::string vertex_label(Vertex v) const;
  const std::vector<std::string>& vertex_labels() const { return labels_; }

  /// Present when the meadow was constructed from a ring.
  const std::optional<RingProvenance>& ring_provenance() const { return mr_; }

 private:
  Meadow() = default;
  void require_mine(const Element& x) const;

  DirectedLattice dl_;
  std::optional<RingProvenance> mr_;
  std::size_t carrier_size_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> unit_masks_;      // per vertex
  std::vector<Vertex> greatest_invertible_;        // per global id, when common
  std::optional<CommonalityWitness> witness_;
};

// ---- maps between meadows --------------------------------------------------

/// A total element map between meadows, stored on dense global ids.
struct MeadowMap {
  MeadowPtr source;
  MeadowPtr target;
  std::vector<std::size_t> map;  // source global id -> target global id

  Meadow::Element apply(const Meadow::Element& x) const;
};

struct MapCheck {
  std::string property;
  bool passed = false;
  std::string counterexample;
};

struct MapReport {
  bool all_passed = false;
  std::vector<MapCheck> checks;
};

/// Verifies f(x+y)=f(x)+f(y), f(x*y)=f(x)*f(y), f(1)=1 over all pairs.
MapReport check_meadow_hom(const MeadowMap& f);

/// check_meadow_hom plus bijectivity. Preservation of a, 0, fibers and the
/// lattice order follows from these.
MapReport verify_meadow_iso(const MeadowMap& f);

// ---- structural checks -----------------------------------------------------

/// For every comparable pair of fiber zeros z <= z', confirms that
/// x -> x + z is a ring homomorphism equal to the stored transition, and
/// that composition along comparable triples is coherent.
MapReport check_transition_maps(const Meadow& m);

std::string meadow_to_dot(const Meadow& m, const std::string& graph_name = "meadow");

}  // namespace meadows

#endif
