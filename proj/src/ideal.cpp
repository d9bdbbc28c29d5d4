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

#include "meadows/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace meadows {

namespace {

// closure of a set under (ideal laws): multiples first, then additive closure
std::vector<Index> ideal_closure(const FiniteRing& r, const std::vector<Index>& seed) {
  const std::size_t n = r.order();
  std::vector<bool> in(n, false);
  std::vector<Index> members{r.zero()};
  in[r.zero()] = true;

  auto insert = [&](Index v) {
    if (!in[v]) {
      in[v] = true;
      members.push_back(v);
    }
  };

  for (Index g : seed) {
    if (g >= n) throw std::invalid_argument("generator index out of range");
    for (Index y = 0; y < n; ++y) insert(r.mul(g, y));
  }
  // additive closure; multiplicative absorption is preserved because
  // x*(a+b) = x*a + x*b stays in the set
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      insert(r.add(members[i], members[j]));

  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Index> greedy_generators(const FiniteRing& r,
                                     const std::vector<Index>& members) {
  std::vector<Index> gens;
  std::vector<bool> covered(r.order(), false);
  covered[r.zero()] = true;
  std::size_t covered_count = 1;
  for (Index m : members) {
    if (covered[m]) continue;
    gens.push_back(m);
    for (Index v : ideal_closure(r, gens)) {
      if (!covered[v]) {
        covered[v] = true;
        ++covered_count;
      }
    }
    if (covered_count == members.size()) break;
  }
  return gens;
}

}  // namespace

Ideal::Ideal(RingPtr ring, const std::vector<Index>& generators)
    : ring_(std::move(ring)) {
  members_ = ideal_closure(*ring_, generators);
  generators_ = greedy_generators(*ring_, members_);
  mask_.assign(ring_->order(), false);
  for (Index m : members_) mask_[m] = true;
}

bool Ideal::operator==(const Ideal& other) const {
  return ring_.get() == other.ring_.get() && members_ == other.members_;
}

bool Ideal::operator<(const Ideal& other) const {
  if (members_.size() != other.members_.size())
    return members_.size() < other.members_.size();
  return members_ < other.members_;
}

bool Ideal::subset_of(const Ideal& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Index m) { return other.contains(m); });
}

std::string Ideal::label() const {
  if (is_zero_ideal()) return "(0)";
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < generators_.size(); ++i)
    out << (i ? "," : "") << ring_->element_name(generators_[i]);
  out << ")";
  return out.str();
}

Ideal ideal_from_members(RingPtr ring, std::vector<Index> members) {
  Ideal i;
  i.ring_ = std::move(ring);
  i.mask_.assign(i.ring_->order(), false);
  for (Index m : members) i.mask_[m] = true;
  i.members_ = std::move(members);
  i.generators_ = greedy_generators(*i.ring_, i.members_);
  return i;
}

Ideal principal_ideal(const RingPtr& r, Index x) {
  if (x >= r->order()) throw std::invalid_argument("element index out of range");
  return Ideal(r, {x});
}

namespace {

void require_same_ring(const Ideal& i, const Ideal& j) {
  if (i.ring().get() != j.ring().get())
    throw std::invalid_argument("ideals belong to different rings");
}

}  // namespace

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const FiniteRing& r = *i.ring();
  std::vector<bool> in(r.order(), false);
  std::vector<Index> members;
  auto insert = [&](Index v) {
    if (!in[v]) {
      in[v] = true;
      members.push_back(v);
    }
  };
  for (Index m : i.members()) insert(m);
  for (Index m : j.members()) insert(m);
  // both operands are ideals, so only additive closure is needed
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b)
      insert(r.add(members[a], members[b]));
  std::sort(members.begin(), members.end());
  return ideal_from_members(i.ring(), std::move(members));
}

Ideal ideal_intersection(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  std::vector<Index> members;
  for (Index m : i.members())
    if (j.contains(m)) members.push_back(m);
  return ideal_from_members(i.ring(), std::move(members));
}

bool is_ideal(const FiniteRing& r, const std::vector<Index>& members) {
  std::vector<bool> in(r.order(), false);
  for (Index m : members) {
    if (m >= r.order()) return false;
    in[m] = true;
  }
  if (!in[r.zero()]) return false;
  for (Index a : members) {
    if (!in[r.neg(a)]) return false;
    for (Index b : members)
      if (!in[r.add(a, b)]) return false;
    for (Index y = 0; y < r.order(); ++y)
      if (!in[r.mul(a, y)]) return false;
  }
  return true;
}

std::vector<Ideal> enumerate_ideals(const RingPtr& r, std::size_t cap) {
  if (r->order() > cap)
    throw CapError("ideal enumeration refused: ring order " +
                   std::to_string(r->order()) + " exceeds cap " + std::to_string(cap));

  std::set<std::vector<Index>> seen;
  std::vector<Ideal> ideals;
  auto consider = [&](Ideal&& cand) {
    if (seen.insert(cand.members()).second) ideals.push_back(std::move(cand));
  };

  for (Index x = 0; x < r->order(); ++x) consider(principal_ideal(r, x));

  // every ideal of a finite ring is a finite sum of principal ideals, so
  // pairwise sums to fixpoint enumerate them all
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t known = ideals.size();
    for (std::size_t a = 0; a < known; ++a) {
      for (std::size_t b = a + 1; b < known; ++b) {
        auto sum = ideal_sum(ideals[a], ideals[b]);
        if (seen.insert(sum.members()).second) {
          ideals.push_back(std::move(sum));
          grew = true;
        }
      }
    }
  }

  std::sort(ideals.begin(), ideals.end());
  return ideals;
}

std::vector<Ideal> maximal_ideals(const RingPtr& r, std::size_t cap) {
  const auto all = enumerate_ideals(r, cap);
  std::vector<Ideal> out;
  for (const auto& i : all) {
    if (i.is_unit_ideal()) continue;
    bool maximal = true;
    for (const auto& j : all) {
      if (j.is_unit_ideal() || j == i) continue;
      if (i.subset_of(j)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

}  // namespace meadows
