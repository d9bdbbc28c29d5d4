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

#ifndef MEADOWS_IDEAL_HPP
#define MEADOWS_IDEAL_HPP

#include <string>
#include <vector>

#include "meadows/common.hpp"
#include "meadows/finite_ring.hpp"

namespace meadows {

/**
  An ideal of a finite ring, stored extensionally as a sorted member list
  plus a membership bitmap. The stored generators are a canonical greedy
  minimal generating set, kept for labels and reports; all arithmetic uses
  the member set.
*/
class Ideal {
 public:
  /// Builds the smallest ideal containing the given elements.
  Ideal(RingPtr ring, const std::vector<Index>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Index>& members() const { return members_; }
  const std::vector<Index>& generators() const { return generators_; }
  std::size_t size() const { return members_.size(); }

  bool contains(Index x) const { return mask_[x]; }
  bool is_zero_ideal() const { return members_.size() == 1; }
  bool is_unit_ideal() const { return members_.size() == ring_->order(); }

  bool operator==(const Ideal& other) const;
  /// Canonical order: (cardinality, lexicographic members).
  bool operator<(const Ideal& other) const;
  /// Set inclusion (same ring assumed).
  bool subset_of(const Ideal& other) const;

  /// Display form "(2)" / "(0)" / "(1,3)".
  std::string label() const;

 private:
  friend Ideal ideal_from_members(RingPtr ring, std::vector<Index> members);

  Ideal() = default;
  RingPtr ring_;
  std::vector<Index> members_;
  std::vector<Index> generators_;
  std::vector<bool> mask_;
};

/// Smallest ideal containing x.
Ideal principal_ideal(const RingPtr& r, Index x);

/// Additive closure of the union; throws on mismatched rings.
Ideal ideal_sum(const Ideal& i, const Ideal& j);

/// Set intersection; throws on mismatched rings.
Ideal ideal_intersection(const Ideal& i, const Ideal& j);

/// True iff the member set satisfies the ideal laws (contains 0, closed
/// under addition, negation, and multiplication by every ring element).
bool is_ideal(const FiniteRing& r, const std::vector<Index>& members);

/**
  The complete duplicate-free list of ideals, sorted by (cardinality,
  lexicographic members). Computed as the closure of all principal ideals
  under pairwise sums; every ideal of a finite ring is a finite sum of
  principal ideals. Refuses rings above the cap.
*/
std::vector<Ideal> enumerate_ideals(const RingPtr& r,
                                    std::size_t cap = kDefaultRingCap);

/// Proper ideals maximal under inclusion. Empty for the zero ring.
std::vector<Ideal> maximal_ideals(const RingPtr& r,
                                  std::size_t cap = kDefaultRingCap);

}  // namespace meadows

#endif
