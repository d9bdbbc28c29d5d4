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

#include "meadows/abelian_group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace meadows {

GroupTable::GroupTable(std::size_t order, unsigned identity,
                       std::vector<unsigned> table, std::vector<std::string> names)
    : order_(order), identity_(identity), table_(std::move(table)),
      names_(std::move(names)) {
  if (order_ == 0 || table_.size() != order_ * order_ || names_.size() != order_)
    throw std::invalid_argument("malformed group table");
  inverse_.assign(order_, 0);
  for (unsigned a = 0; a < order_; ++a) {
    bool found = false;
    for (unsigned b = 0; b < order_; ++b) {
      if (op(a, b) == identity_) {
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("group table has a non-invertible element");
  }
}

GroupTable GroupTable::product_of_cyclics(const std::vector<unsigned>& orders) {
  for (unsigned n : orders)
    if (n == 0) throw std::invalid_argument("cyclic order 0 is not a group");

  std::size_t order = 1;
  for (unsigned n : orders) {
    if (order > (1u << 20) / n)
      throw CapError("group order too large to materialize");
    order *= n;
  }

  const std::size_t k = orders.size();
  auto decode = [&](unsigned v) {
    std::vector<unsigned> c(k);
    unsigned rest = v;
    for (std::size_t i = k; i-- > 0;) {
      c[i] = rest % orders[i];
      rest /= orders[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<unsigned>& c) {
    unsigned v = 0;
    for (std::size_t i = 0; i < k; ++i) v = v * orders[i] + c[i];
    return v;
  };

  std::vector<unsigned> table(order * order);
  for (unsigned a = 0; a < order; ++a) {
    const auto ca = decode(a);
    for (unsigned b = 0; b < order; ++b) {
      auto cb = decode(b);
      for (std::size_t i = 0; i < k; ++i) cb[i] = (ca[i] + cb[i]) % orders[i];
      table[a * order + b] = encode(cb);
    }
  }

  std::vector<std::string> names(order);
  for (unsigned a = 0; a < order; ++a) {
    const auto c = decode(a);
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (c[i] == 0) continue;
      if (!first) out << "*";
      first = false;
      if (k == 1)
        out << "g";
      else
        out << "g" << (i + 1);
      if (c[i] > 1) out << "^" << c[i];
    }
    names[a] = first ? "1" : out.str();
  }

  return GroupTable(order, 0, std::move(table), std::move(names));
}

namespace {

// closure of a nonempty subset under the group operation; in a finite group
// this already yields a subgroup
std::vector<unsigned> op_closure(const GroupTable& g, std::vector<unsigned> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<unsigned> members;
  seed.push_back(g.identity());
  for (unsigned s : seed) {
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const unsigned v = g.op(members[i], members[j]);
      if (!in[v]) {
        in[v] = true;
        members.push_back(v);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<std::vector<unsigned>> GroupTable::subgroups() const {
  std::set<std::vector<unsigned>> found;
  for (unsigned a = 0; a < order_; ++a)
    found.insert(op_closure(*this, {a}));

  // joins of known subgroups until fixpoint
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<unsigned>> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<unsigned> seed = snapshot[i];
        seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
        auto joined = op_closure(*this, std::move(seed));
        if (found.insert(std::move(joined)).second) grew = true;
      }
    }
  }

  std::vector<std::vector<unsigned>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::pair<GroupTable, std::vector<unsigned>> GroupTable::quotient(
    const std::vector<unsigned>& subgroup) const {
  std::vector<bool> in(order_, false);
  for (unsigned h : subgroup) {
    if (h >= order_) throw std::invalid_argument("subgroup member out of range");
    in[h] = true;
  }
  if (!in[identity_]) throw std::invalid_argument("subgroup must contain the identity");
  for (unsigned a : subgroup)
    for (unsigned b : subgroup)
      if (!in[op(a, b)]) throw std::invalid_argument("subgroup is not closed");

  std::vector<unsigned> rep(order_);
  for (unsigned x = 0; x < order_; ++x) {
    unsigned least = x;
    for (unsigned h : subgroup) least = std::min(least, op(x, h));
    rep[x] = least;
  }
  std::vector<unsigned> reps;
  for (unsigned x = 0; x < order_; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<unsigned> coset_of(order_);
  for (unsigned x = 0; x < order_; ++x) {
    const auto it = std::lower_bound(reps.begin(), reps.end(), rep[x]);
    coset_of[x] = static_cast<unsigned>(it - reps.begin());
  }

  const std::size_t q = reps.size();
  std::vector<unsigned> table(q * q);
  std::vector<std::string> names(q);
  for (unsigned a = 0; a < q; ++a) {
    names[a] = names_[reps[a]];
    for (unsigned b = 0; b < q; ++b)
      table[a * q + b] = coset_of[op(reps[a], reps[b])];
  }
  return {GroupTable(q, coset_of[identity_], std::move(table), std::move(names)),
          coset_of};
}

}  // namespace meadows
