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

#ifndef MEADOWS_FINITE_RING_HPP
#define MEADOWS_FINITE_RING_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "meadows/common.hpp"

namespace meadows {

class FiniteRing;
class Ideal;

/// Shared immutable handle; every element index is relative to one of these.
using RingPtr = std::shared_ptr<const FiniteRing>;

/**
  A finite commutative unital ring with carrier 0..order-1.

  Operations are total pure functions of carrier indices. For carriers up to
  kDefaultRingCap the binary operation tables are materialized; larger rings
  (possible with a raised cap) evaluate the construction kernels on the fly.
  Equality of elements is index equality within one ring object.

  The descriptor records the construction recipe in the ring-spec DSL, so any
  ring appearing in a report can be rebuilt from its descriptor.
*/
class FiniteRing {
 public:
  using BinaryFn = std::function<Index(Index, Index)>;
  using UnaryFn = std::function<Index(Index)>;
  using NameFn = std::function<std::string(Index)>;

  static RingPtr create(std::size_t order, Index zero, Index one,
                        BinaryFn add, BinaryFn mul, UnaryFn neg,
                        std::string descriptor, std::string name,
                        NameFn element_namer);

  std::size_t order() const { return order_; }
  Index zero() const { return zero_; }
  Index one() const { return one_; }
  bool is_zero_ring() const { return order_ == 1; }

  Index add(Index x, Index y) const {
    return add_table_.empty() ? add_fn_(x, y) : add_table_[x * order_ + y];
  }
  Index mul(Index x, Index y) const {
    return mul_table_.empty() ? mul_fn_(x, y) : mul_table_[x * order_ + y];
  }
  Index neg(Index x) const {
    return neg_table_.empty() ? neg_fn_(x) : neg_table_[x];
  }
  Index sub(Index x, Index y) const { return add(x, neg(y)); }

  /// Construction recipe (ring-spec DSL where one exists).
  const std::string& descriptor() const { return descriptor_; }
  /// Short display label, e.g. "Z_6".
  const std::string& name() const { return name_; }
  std::string element_name(Index x) const;

 private:
  FiniteRing() = default;

  std::size_t order_ = 0;
  Index zero_ = 0, one_ = 0;
  BinaryFn add_fn_, mul_fn_;
  UnaryFn neg_fn_;
  std::vector<std::uint16_t> add_table_, mul_table_, neg_table_;
  std::string descriptor_, name_;
  NameFn namer_;
};

/// Unital ring homomorphism stored as a total map of carrier indices.
/// The constructor verifies preservation of add, mul, neg, zero and one.
class RingHom {
 public:
  RingHom(RingPtr source, RingPtr target, std::vector<Index> map);

  static RingHom identity(const RingPtr& r);
  /// Composite g.after(f) = g o f  (applies f first).
  RingHom after(const RingHom& f) const;

  Index operator()(Index x) const { return map_[x]; }
  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Index>& map() const { return map_; }

  bool is_surjective() const;
  bool is_injective() const;
  bool operator==(const RingHom& other) const;

 private:
  RingPtr source_, target_;
  std::vector<Index> map_;
};

// ---- constructions ---------------------------------------------------------

/// Z_n with index i = residue i. n = 1 yields the zero ring.
RingPtr make_zn(std::size_t n, std::size_t cap = kDefaultRingCap);

/// F_p[x]/(modulus). Coefficients little-endian, modulus monic of degree >= 1.
/// Element i encodes its coefficient vector in base p.
RingPtr make_poly_quotient(std::size_t p, const std::vector<std::size_t>& modulus,
                           std::size_t cap = kDefaultRingCap);

/// Componentwise product; index is mixed-radix, first factor most significant.
RingPtr make_product(const std::vector<RingPtr>& factors,
                     std::size_t cap = kDefaultRingCap);

/// Group algebra base[A] for A a product of cyclic groups of the given
/// orders. Carrier = functions A -> base (mixed-radix index, identity digit
/// least significant); multiplication is convolution over the group law.
RingPtr make_group_algebra(const RingPtr& base,
                           const std::vector<unsigned>& cyclic_orders,
                           std::size_t cap = kDefaultRingCap);

/// R/I with coset representatives = least carrier index in each coset.
/// Also returns the projection x -> x + I.
std::pair<RingPtr, RingHom> make_quotient(const RingPtr& r, const Ideal& i);

// ---- element queries -------------------------------------------------------

/// Sorted list of invertible elements. The zero ring reports {0}.
std::vector<Index> units(const FiniteRing& r);
/// Membership bitmap version of units(), for inner loops.
std::vector<bool> unit_mask(const FiniteRing& r);
/// The inverse of a unit; throws std::invalid_argument on a non-unit.
Index unit_inverse(const FiniteRing& r, Index x);

/// Sorted list of solutions of e*e = e.
std::vector<Index> idempotents(const FiniteRing& r);
/// Nonzero idempotents minimal under e <= f iff e*f = e. For a finite
/// commutative ring these are pairwise orthogonal and sum to one.
std::vector<Index> primitive_idempotents(const FiniteRing& r);

/// The ring e*R with identity e, plus the embedding of its carrier into r.
/// Requires e idempotent and nonzero.
std::pair<RingPtr, std::vector<Index>> corner_ring(const RingPtr& r, Index e);

/// Additive order of x (least k >= 1 with k*x = 0).
std::size_t additive_order(const FiniteRing& r, Index x);

// ---- isomorphism search ----------------------------------------------------

enum class SearchStatus { Found, NotIsomorphic, Unknown };

struct RingIsoResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<RingHom> iso;
  std::uint64_t nodes = 0;  // search effort spent
};

/// Budgeted backtracking over images of a small generating sequence, pruned
/// by per-element invariants (additive order, unit/idempotent/nilpotent
/// status). "Unknown" is only reported when the budget runs out; a completed
/// search reports NotIsomorphic.
RingIsoResult find_ring_isomorphism(const RingPtr& r, const RingPtr& s,
                                    std::uint64_t budget = 200000);

/// Enumerates ring isomorphisms r -> s, invoking fn on each; fn returns
/// false to stop the walk (reported as Found). The budget is decremented
/// as the search runs, so nested searches can share one pool; Unknown is
/// returned iff it hits zero before the space is exhausted.
SearchStatus for_each_ring_isomorphism(
    const RingPtr& r, const RingPtr& s, std::uint64_t& budget,
    const std::function<bool(const RingHom&)>& fn);

// ---- validation ------------------------------------------------------------

struct RingLawResult {
  std::string law;
  bool passed = false;
  std::size_t cases = 0;
  std::string counterexample;  // empty when passed
};

struct RingReport {
  bool all_passed = false;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::vector<RingLawResult> laws;
};

/// Checks the full ring-axiom suite (abelian group, commutative monoid,
/// distributivity). Exhaustive up to exhaustive_cap elements, seeded
/// sampling above.
RingReport validate_ring(const FiniteRing& r,
                         std::size_t exhaustive_cap = 64,
                         std::size_t samples = kDefaultSamples,
                         std::uint64_t seed = kDefaultSeed);

}  // namespace meadows

#endif
