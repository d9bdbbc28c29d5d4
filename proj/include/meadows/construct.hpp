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

#ifndef MEADOWS_CONSTRUCT_HPP
#define MEADOWS_CONSTRUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "meadows/meadow.hpp"

namespace meadows {

/**
  The canonical meadow of a ring: one vertex per ideal (reverse inclusion),
  fiber R/I, transitions the canonical projections, bottom the unit ideal
  whose quotient is the zero ring. Rejects the zero ring (the top must be
  unital) and rings whose ideal enumeration exceeds the cap.
*/
MeadowPtr build_meadow_of_ring(const RingPtr& r, std::size_t cap = kDefaultRingCap);

/**
  The group-algebra meadow of base[A], A the product of cyclic groups of
  the given orders: one vertex per subgroup H of A under reverse inclusion
  carrying base[A/H], transitions g -> gH, plus an adjoined bottom vertex
  for a. Vertex count is therefore subgroup count + 1.
*/
MeadowPtr build_group_algebra_meadow(const RingPtr& base,
                                     const std::vector<unsigned>& cyclic_orders,
                                     std::size_t cap = kDefaultRingCap);

/**
  Lifts a surjective ring homomorphism f: R -> S to the meadow map
  (x + I) -> (f(x) + f(I)) between the canonical meadows, verified against
  the homomorphism laws. Non-surjective maps are refused: images of ideals
  need not be ideals, so the lift is not defined.
*/
MeadowMap lift_surjective_hom(const RingHom& f, const MeadowPtr& source_meadow,
                              const MeadowPtr& target_meadow);

/// Cartesian product: product lattice, componentwise fibers and
/// transitions. The absorbent element is the pair of absorbents.
MeadowPtr meadow_product(const MeadowPtr& p, const MeadowPtr& q);

/// N-ary product (used by the decomposition); a single factor is returned
/// unchanged.
MeadowPtr meadow_product(const std::vector<MeadowPtr>& factors);

// ---- decomposition ---------------------------------------------------------

struct Decomposition {
  MeadowPtr meadow;                       // the input
  std::vector<Index> idempotents;         // primitive, in factor order
  std::vector<RingPtr> factor_rings;      // corner rings, canonical order
  std::vector<MeadowPtr> factors;         // canonical meadows of the corners
  MeadowPtr product;                      // product of the factors
  MeadowMap iso;                          // product -> meadow, verified
  MapReport iso_report;
};

struct DecomposeOptions {
  /// Permutation applied to the discovered primitive idempotents before
  /// factors are built; the canonical output order must not depend on it.
  std::optional<std::vector<std::size_t>> idempotent_order;
  std::size_t cap = kDefaultRingCap;
};

/**
  Decomposes a meadow of the form built by build_meadow_of_ring into local
  factors: primitive idempotents of the base ring give corner rings, each
  verified local (unique maximal ideal); the isomorphism from the product
  of their meadows is constructed explicitly ((x, y) + I x J -> (x+I, y+J),
  generalized to t factors) and verified. Factors are emitted sorted by
  (order, descriptor) so reruns agree up to the permutation the uniqueness
  statement allows. Meadows without ring provenance are refused.
*/
Decomposition decompose_local(const MeadowPtr& m, const DecomposeOptions& opts = {});

// ---- isomorphism test ------------------------------------------------------

struct MeadowIsoResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<MeadowMap> iso;  // set when status == Found
  std::string obstruction;       // set when status == NotIsomorphic
  std::uint64_t nodes = 0;
};

/**
  Three-valued isomorphism test. Cheap invariants (carrier size, lattice
  shape, fiber orders) decide most negatives; meadows with ring provenance
  reduce to ring isomorphism of the top fibers, lifted explicitly; general
  meadows get a budgeted search over lattice isomorphisms combined with
  per-fiber ring isomorphisms compatible with the transitions. Budget
  exhaustion reports Unknown, never a false negative.
*/
MeadowIsoResult meadows_isomorphic(const MeadowPtr& a, const MeadowPtr& b,
                                   std::uint64_t budget = 200000);

}  // namespace meadows

#endif
