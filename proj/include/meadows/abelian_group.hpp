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

#ifndef MEADOWS_ABELIAN_GROUP_HPP
#define MEADOWS_ABELIAN_GROUP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "meadows/common.hpp"
#include "meadows/finite_ring.hpp"

namespace meadows {

/// A finite abelian group, materialized as an operation table. Small by
/// construction; group algebras over it are where size shows up.
class GroupTable {
 public:
  /// Direct product of cyclic groups of the given orders (written
  /// additively). Element index is mixed-radix, first order most significant.
  static GroupTable product_of_cyclics(const std::vector<unsigned>& orders);

  std::size_t order() const { return order_; }
  unsigned identity() const { return identity_; }
  unsigned op(unsigned a, unsigned b) const { return table_[a * order_ + b]; }
  unsigned inverse(unsigned a) const { return inverse_[a]; }
  const std::string& element_name(unsigned a) const { return names_[a]; }

  /// All subgroups as sorted member lists, in (size, lexicographic) order.
  /// Worklist closure: cyclic subgroups, then pairwise joins to fixpoint.
  std::vector<std::vector<unsigned>> subgroups() const;

  /// Quotient by a subgroup; cosets take their least member as canonical
  /// representative. Also returns the projection element -> its coset.
  std::pair<GroupTable, std::vector<unsigned>> quotient(
      const std::vector<unsigned>& subgroup) const;

  GroupTable(std::size_t order, unsigned identity,
             std::vector<unsigned> table, std::vector<std::string> names);

 private:
  std::size_t order_ = 1;
  unsigned identity_ = 0;
  std::vector<unsigned> table_;
  std::vector<unsigned> inverse_;
  std::vector<std::string> names_;
};

/// Group algebra base[G] over an explicit group table. The public DSL form
/// make_group_algebra() wraps this with G a product of cyclics; quotient
/// groups A/H use it directly.
RingPtr make_group_algebra_over(const RingPtr& base, const GroupTable& group,
                                const std::string& descriptor,
                                const std::string& name,
                                std::size_t cap = kDefaultRingCap);

}  // namespace meadows

#endif
