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

#include "meadows/finite_ring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "meadows/abelian_group.hpp"
#include "meadows/ideal.hpp"

namespace meadows {

namespace {

std::string index_name(Index x) { return std::to_string(x); }

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// order * factor, refusing to exceed cap
std::size_t grow_order(std::size_t order, std::size_t factor, std::size_t cap,
                       const std::string& what) {
  if (factor != 0 && order > cap / factor)
    throw CapError(what + " would exceed the size cap of " + std::to_string(cap) +
                   " elements");
  return order * factor;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

// ---- FiniteRing -------------------------------------------------------------

RingPtr FiniteRing::create(std::size_t order, Index zero, Index one,
                           BinaryFn add, BinaryFn mul, UnaryFn neg,
                           std::string descriptor, std::string name,
                           NameFn element_namer) {
  require(order >= 1, "ring order must be positive");
  require(zero < order && one < order, "zero/one index out of range");
  require(order == 1 || zero != one, "zero and one may coincide only in the zero ring");

  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->order_ = order;
  ring->zero_ = zero;
  ring->one_ = one;
  ring->add_fn_ = std::move(add);
  ring->mul_fn_ = std::move(mul);
  ring->neg_fn_ = std::move(neg);
  ring->descriptor_ = std::move(descriptor);
  ring->name_ = std::move(name);
  ring->namer_ = element_namer ? std::move(element_namer) : index_name;

  if (order <= kDefaultRingCap) {
    ring->add_table_.resize(order * order);
    ring->mul_table_.resize(order * order);
    ring->neg_table_.resize(order);
    for (Index x = 0; x < order; ++x) {
      ring->neg_table_[x] = static_cast<std::uint16_t>(ring->neg_fn_(x));
      for (Index y = 0; y < order; ++y) {
        ring->add_table_[x * order + y] = static_cast<std::uint16_t>(ring->add_fn_(x, y));
        ring->mul_table_[x * order + y] = static_cast<std::uint16_t>(ring->mul_fn_(x, y));
      }
    }
  }
  return ring;
}

std::string FiniteRing::element_name(Index x) const {
  if (x >= order_) throw std::invalid_argument("element index out of range");
  return namer_(x);
}

// ---- RingHom ----------------------------------------------------------------

RingHom::RingHom(RingPtr source, RingPtr target, std::vector<Index> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  require(static_cast<bool>(source_) && static_cast<bool>(target_), "null ring");
  const std::size_t n = source_->order();
  require(map_.size() == n, "hom map must cover the whole source carrier");
  for (Index v : map_)
    require(v < target_->order(), "hom map value out of target range");
  require(map_[source_->zero()] == target_->zero(), "hom must send 0 to 0");
  require(map_[source_->one()] == target_->one(), "hom must send 1 to 1");
  for (Index x = 0; x < n; ++x) {
    require(map_[source_->neg(x)] == target_->neg(map_[x]),
            "hom must preserve negation");
    for (Index y = 0; y < n; ++y) {
      if (map_[source_->add(x, y)] != target_->add(map_[x], map_[y]))
        throw std::invalid_argument(
            "hom does not preserve addition at (" + source_->element_name(x) +
            ", " + source_->element_name(y) + ")");
      if (map_[source_->mul(x, y)] != target_->mul(map_[x], map_[y]))
        throw std::invalid_argument(
            "hom does not preserve multiplication at (" + source_->element_name(x) +
            ", " + source_->element_name(y) + ")");
    }
  }
}

RingHom RingHom::identity(const RingPtr& r) {
  std::vector<Index> id(r->order());
  std::iota(id.begin(), id.end(), 0u);
  return RingHom(r, r, std::move(id));
}

RingHom RingHom::after(const RingHom& f) const {
  require(f.target_.get() == source_.get(),
          "composition requires matching middle ring");
  std::vector<Index> m(f.map_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = map_[f.map_[i]];
  return RingHom(f.source_, target_, std::move(m));
}

bool RingHom::is_surjective() const {
  std::vector<bool> hit(target_->order(), false);
  for (Index v : map_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool RingHom::is_injective() const {
  std::vector<bool> hit(target_->order(), false);
  for (Index v : map_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool RingHom::operator==(const RingHom& other) const {
  return source_.get() == other.source_.get() &&
         target_.get() == other.target_.get() && map_ == other.map_;
}

// ---- Z_n --------------------------------------------------------------------

RingPtr make_zn(std::size_t n, std::size_t cap) {
  require(n >= 1, "Z_n requires n >= 1");
  if (n > cap)
    throw CapError("zn:" + std::to_string(n) + " exceeds the size cap of " +
                   std::to_string(cap));
  const Index m = static_cast<Index>(n);
  return FiniteRing::create(
      n, 0, n == 1 ? 0 : 1,
      [m](Index x, Index y) { return (x + y) % m; },
      [m](Index x, Index y) {
        return static_cast<Index>((static_cast<std::uint64_t>(x) * y) % m);
      },
      [m](Index x) { return (m - x) % m; },
      "zn:" + std::to_string(n), "Z_" + std::to_string(n), index_name);
}

// ---- F_p[x]/(f) ---------------------------------------------------------------

namespace {

using Poly = std::vector<std::size_t>;  // little-endian coefficients

std::string poly_pretty(const Poly& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const std::size_t c = coeffs[k];
    if (c == 0) continue;
    if (!first) out << "+";
    first = false;
    if (k == 0) {
      out << c;
    } else {
      if (c != 1) out << c;
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

RingPtr make_poly_quotient(std::size_t p, const std::vector<std::size_t>& modulus,
                           std::size_t cap) {
  require(is_prime(p), "poly: p must be prime");
  require(modulus.size() >= 2, "poly: modulus must have degree >= 1");
  require(modulus.back() == 1, "poly: modulus must be monic");
  for (std::size_t c : modulus)
    require(c < p, "poly: coefficients must lie in 0..p-1");

  const std::size_t degree = modulus.size() - 1;
  std::size_t order = 1;
  for (std::size_t k = 0; k < degree; ++k)
    order = grow_order(order, p, cap, "poly:p=" + std::to_string(p));

  // x^k mod f for k = 0 .. 2(d-1), as coefficient vectors of length d
  std::vector<Poly> power_rem(2 * degree - 1, Poly(degree, 0));
  for (std::size_t k = 0; k < degree; ++k) power_rem[k][k] = 1;
  for (std::size_t k = degree; k + 1 <= 2 * degree - 1; ++k) {
    // x^k = x * x^(k-1), then substitute x^d = -(f - x^d)
    Poly shifted(degree + 1, 0);
    for (std::size_t j = 0; j < degree; ++j) shifted[j + 1] = power_rem[k - 1][j];
    const std::size_t lead = shifted[degree];
    Poly rem(degree, 0);
    for (std::size_t j = 0; j < degree; ++j)
      rem[j] = (shifted[j] + (p - modulus[j]) % p * lead) % p;
    power_rem[k] = std::move(rem);
  }

  auto decode = [p, degree](Index v) {
    Poly c(degree);
    std::size_t rest = v;
    for (std::size_t k = 0; k < degree; ++k) {
      c[k] = rest % p;
      rest /= p;
    }
    return c;
  };
  auto encode = [p, degree](const Poly& c) {
    std::size_t v = 0;
    for (std::size_t k = degree; k-- > 0;) v = v * p + c[k];
    return static_cast<Index>(v);
  };

  auto add = [p, degree, decode, encode](Index x, Index y) {
    Poly a = decode(x), b = decode(y);
    for (std::size_t k = 0; k < degree; ++k) a[k] = (a[k] + b[k]) % p;
    return encode(a);
  };
  auto neg = [p, degree, decode, encode](Index x) {
    Poly a = decode(x);
    for (std::size_t k = 0; k < degree; ++k) a[k] = (p - a[k]) % p;
    return encode(a);
  };
  auto mul = [p, degree, decode, encode, power_rem](Index x, Index y) {
    Poly a = decode(x), b = decode(y);
    Poly conv(2 * degree - 1, 0);
    for (std::size_t i = 0; i < degree; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < degree; ++j)
        conv[i + j] = (conv[i + j] + a[i] * b[j]) % p;
    }
    Poly out(degree, 0);
    for (std::size_t k = 0; k < conv.size(); ++k) {
      if (conv[k] == 0) continue;
      for (std::size_t j = 0; j < degree; ++j)
        out[j] = (out[j] + conv[k] * power_rem[k][j]) % p;
    }
    return encode(out);
  };

  std::ostringstream desc;
  desc << "poly:p=" << p << ",mod=[";
  for (std::size_t k = 0; k < modulus.size(); ++k)
    desc << (k ? "," : "") << modulus[k];
  desc << "]";
  const std::string name = "F_" + std::to_string(p) + "[x]/(" + poly_pretty(modulus) + ")";

  return FiniteRing::create(order, 0, 1, add, mul, neg, desc.str(), name,
                            [decode](Index v) { return poly_pretty(decode(v)); });
}

// ---- products -----------------------------------------------------------------

RingPtr make_product(const std::vector<RingPtr>& factors, std::size_t cap) {
  require(!factors.empty(), "product requires at least one factor");
  if (factors.size() == 1) return factors.front();
  std::size_t order = 1;
  for (const auto& f : factors) order = grow_order(order, f->order(), cap, "prod");

  const std::size_t k = factors.size();
  auto decode = [factors, k](Index v) {
    std::vector<Index> c(k);
    std::size_t rest = v;
    for (std::size_t i = k; i-- > 0;) {
      c[i] = static_cast<Index>(rest % factors[i]->order());
      rest /= factors[i]->order();
    }
    return c;
  };
  auto encode = [factors, k](const std::vector<Index>& c) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < k; ++i) v = v * factors[i]->order() + c[i];
    return static_cast<Index>(v);
  };

  auto add = [factors, k, decode, encode](Index x, Index y) {
    auto a = decode(x), b = decode(y);
    for (std::size_t i = 0; i < k; ++i) a[i] = factors[i]->add(a[i], b[i]);
    return encode(a);
  };
  auto mul = [factors, k, decode, encode](Index x, Index y) {
    auto a = decode(x), b = decode(y);
    for (std::size_t i = 0; i < k; ++i) a[i] = factors[i]->mul(a[i], b[i]);
    return encode(a);
  };
  auto neg = [factors, k, decode, encode](Index x) {
    auto a = decode(x);
    for (std::size_t i = 0; i < k; ++i) a[i] = factors[i]->neg(a[i]);
    return encode(a);
  };

  std::vector<Index> zero_parts(k), one_parts(k);
  for (std::size_t i = 0; i < k; ++i) {
    zero_parts[i] = factors[i]->zero();
    one_parts[i] = factors[i]->one();
  }

  std::ostringstream desc, name;
  desc << "prod:(";
  for (std::size_t i = 0; i < k; ++i) {
    desc << (i ? "," : "") << factors[i]->descriptor();
    name << (i ? " x " : "") << factors[i]->name();
  }
  desc << ")";

  auto namer = [factors, k, decode](Index v) {
    auto c = decode(v);
    std::string out = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) out += ",";
      out += factors[i]->element_name(c[i]);
    }
    return out + ")";
  };

  return FiniteRing::create(order, encode(zero_parts), encode(one_parts), add, mul,
                            neg, desc.str(), name.str(), namer);
}

// ---- group algebras -------------------------------------------------------------

RingPtr make_group_algebra_over(const RingPtr& base, const GroupTable& group_in,
                                const std::string& descriptor,
                                const std::string& name, std::size_t cap) {
  require(base->order() >= 2, "group algebra requires a base ring of order >= 2");
  // kernels outlive the caller's GroupTable
  auto group = std::make_shared<GroupTable>(group_in);
  const std::size_t g = group->order();
  const std::size_t b = base->order();
  std::size_t order = 1;
  for (std::size_t i = 0; i < g; ++i) order = grow_order(order, b, cap, "ga");

  // coefficient vector indexed by group element, identity least significant
  auto decode = [b, g](Index v) {
    std::vector<Index> c(g);
    std::size_t rest = v;
    for (std::size_t i = 0; i < g; ++i) {
      c[i] = static_cast<Index>(rest % b);
      rest /= b;
    }
    return c;
  };
  auto encode = [b, g](const std::vector<Index>& c) {
    std::size_t v = 0;
    for (std::size_t i = g; i-- > 0;) v = v * b + c[i];
    return static_cast<Index>(v);
  };

  auto add = [base, g, decode, encode](Index x, Index y) {
    auto a = decode(x), c = decode(y);
    for (std::size_t i = 0; i < g; ++i) a[i] = base->add(a[i], c[i]);
    return encode(a);
  };
  auto neg = [base, g, decode, encode](Index x) {
    auto a = decode(x);
    for (std::size_t i = 0; i < g; ++i) a[i] = base->neg(a[i]);
    return encode(a);
  };
  auto mul = [base, group, g, decode, encode](Index x, Index y) {
    auto a = decode(x), c = decode(y);
    std::vector<Index> out(g, base->zero());
    for (std::size_t i = 0; i < g; ++i) {
      if (a[i] == base->zero()) continue;
      for (std::size_t j = 0; j < g; ++j) {
        if (c[j] == base->zero()) continue;
        const unsigned k = group->op(static_cast<unsigned>(i), static_cast<unsigned>(j));
        out[k] = base->add(out[k], base->mul(a[i], c[j]));
      }
    }
    return encode(out);
  };

  std::vector<Index> one_vec(g, base->zero());
  one_vec[group->identity()] = base->one();

  auto namer = [base, group, g, decode](Index v) {
    auto c = decode(v);
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < g; ++i) {
      if (c[i] == base->zero()) continue;
      if (!first) out << "+";
      first = false;
      const bool unit_coeff = (c[i] == base->one());
      if (i == group->identity()) {
        out << base->element_name(c[i]);
      } else if (unit_coeff) {
        out << group->element_name(static_cast<unsigned>(i));
      } else {
        out << base->element_name(c[i]) << "*"
            << group->element_name(static_cast<unsigned>(i));
      }
    }
    if (first) out << base->element_name(base->zero());
    return out.str();
  };

  return FiniteRing::create(order, 0, encode(one_vec), add, mul, neg, descriptor,
                            name, namer);
}

RingPtr make_group_algebra(const RingPtr& base,
                           const std::vector<unsigned>& cyclic_orders,
                           std::size_t cap) {
  GroupTable group = GroupTable::product_of_cyclics(cyclic_orders);
  std::ostringstream desc, gname;
  desc << "ga:base=" << base->descriptor() << ",group=[";
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    desc << (i ? "," : "") << cyclic_orders[i];
    gname << (i ? "x" : "") << "Z" << cyclic_orders[i];
  }
  desc << "]";
  return make_group_algebra_over(base, group, desc.str(),
                                 base->name() + "[" + gname.str() + "]", cap);
}

// ---- quotients --------------------------------------------------------------

std::pair<RingPtr, RingHom> make_quotient(const RingPtr& r, const Ideal& ideal) {
  require(ideal.ring().get() == r.get(), "ideal belongs to a different ring");

  if (ideal.is_zero_ideal()) return {r, RingHom::identity(r)};

  const std::size_t n = r->order();
  // coset representative: least index in x + I
  std::vector<Index> rep(n);
  for (Index x = 0; x < n; ++x) {
    Index least = x;
    for (Index i : ideal.members()) least = std::min(least, r->add(x, i));
    rep[x] = least;
  }
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<Index> coset_of(n);
  for (Index x = 0; x < n; ++x) {
    const auto it = std::lower_bound(reps.begin(), reps.end(), rep[x]);
    coset_of[x] = static_cast<Index>(it - reps.begin());
  }

  std::ostringstream gens;
  gens << "[";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    gens << (i ? "," : "") << ideal.generators()[i];
  gens << "]";
  const std::string desc = "quot:" + r->descriptor() + "/gens=" + gens.str();
  const std::string name = r->name() + "/" + ideal.label();

  auto quotient = FiniteRing::create(
      reps.size(), coset_of[r->zero()], coset_of[r->one()],
      [r, reps, coset_of](Index x, Index y) {
        return coset_of[r->add(reps[x], reps[y])];
      },
      [r, reps, coset_of](Index x, Index y) {
        return coset_of[r->mul(reps[x], reps[y])];
      },
      [r, reps, coset_of](Index x) { return coset_of[r->neg(reps[x])]; },
      desc, name, [r, reps](Index x) { return r->element_name(reps[x]); });
  return {quotient, RingHom(r, quotient, coset_of)};
}

// ---- element queries ----------------------------------------------------------

std::vector<bool> unit_mask(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<bool> mask(n, false);
  for (Index x = 0; x < n; ++x) {
    if (mask[x]) continue;
    for (Index y = 0; y < n; ++y) {
      if (r.mul(x, y) == r.one()) {
        mask[x] = true;
        mask[y] = true;
        break;
      }
    }
  }
  return mask;
}

std::vector<Index> units(const FiniteRing& r) {
  auto mask = unit_mask(r);
  std::vector<Index> out;
  for (Index x = 0; x < r.order(); ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

Index unit_inverse(const FiniteRing& r, Index x) {
  for (Index y = 0; y < r.order(); ++y)
    if (r.mul(x, y) == r.one()) return y;
  throw std::invalid_argument("unit_inverse: " + r.element_name(x) +
                              " is not a unit of " + r.name());
}

std::vector<Index> idempotents(const FiniteRing& r) {
  std::vector<Index> out;
  for (Index x = 0; x < r.order(); ++x)
    if (r.mul(x, x) == x) out.push_back(x);
  return out;
}

std::vector<Index> primitive_idempotents(const FiniteRing& r) {
  const auto idems = idempotents(r);
  std::vector<Index> out;
  for (Index e : idems) {
    if (e == r.zero()) continue;
    bool minimal = true;
    for (Index f : idems) {
      if (f == r.zero() || f == e) continue;
      if (r.mul(f, e) == f) {  // f <= e
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

std::pair<RingPtr, std::vector<Index>> corner_ring(const RingPtr& r, Index e) {
  require(e < r->order(), "idempotent index out of range");
  require(r->mul(e, e) == e, "corner_ring requires an idempotent");
  require(e != r->zero(), "corner_ring requires a nonzero idempotent");

  if (e == r->one()) {  // 1*R is the ring itself
    std::vector<Index> all(r->order());
    std::iota(all.begin(), all.end(), 0u);
    return {r, std::move(all)};
  }

  const std::size_t n = r->order();
  std::vector<bool> in(n, false);
  std::vector<Index> members;
  for (Index x = 0; x < n; ++x) {
    const Index ex = r->mul(e, x);
    if (!in[ex]) {
      in[ex] = true;
      members.push_back(ex);
    }
  }
  std::sort(members.begin(), members.end());
  std::vector<Index> local_of(n, 0);
  for (std::size_t i = 0; i < members.size(); ++i) local_of[members[i]] = static_cast<Index>(i);

  const std::string desc = "corner:" + r->descriptor() + "@" + std::to_string(e);
  const std::string name = r->element_name(e) + r->name();

  auto ring = FiniteRing::create(
      members.size(), local_of[r->zero()], local_of[e],
      [r, members, local_of](Index x, Index y) {
        return local_of[r->add(members[x], members[y])];
      },
      [r, members, local_of](Index x, Index y) {
        return local_of[r->mul(members[x], members[y])];
      },
      [r, members, local_of](Index x) { return local_of[r->neg(members[x])]; },
      desc, name, [r, members](Index x) { return r->element_name(members[x]); });
  return {ring, members};
}

std::size_t additive_order(const FiniteRing& r, Index x) {
  std::size_t k = 1;
  Index acc = x;
  while (acc != r.zero()) {
    acc = r.add(acc, x);
    ++k;
  }
  return k;
}

// ---- validation ----------------------------------------------------------------

namespace {

struct TupleSource {
  const std::size_t n;
  const bool sampled;
  const std::size_t samples;
  std::mt19937_64 rng;

  explicit TupleSource(std::size_t order, bool sample, std::size_t count,
                       std::uint64_t seed)
      : n(order), sampled(sample), samples(count), rng(seed) {}

  template <typename Fn>  // fn(x, y, z) -> bool; returns first failing tuple
  std::optional<std::array<Index, 3>> sweep3(Fn&& fn) {
    if (!sampled) {
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          for (Index z = 0; z < n; ++z)
            if (!fn(x, y, z)) return std::array<Index, 3>{x, y, z};
      return std::nullopt;
    }
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
    for (std::size_t s = 0; s < samples; ++s) {
      const Index x = pick(rng), y = pick(rng), z = pick(rng);
      if (!fn(x, y, z)) return std::array<Index, 3>{x, y, z};
    }
    return std::nullopt;
  }

  template <typename Fn>
  std::optional<std::array<Index, 3>> sweep2(Fn&& fn) {
    if (!sampled) {
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          if (!fn(x, y)) return std::array<Index, 3>{x, y, 0};
      return std::nullopt;
    }
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
    for (std::size_t s = 0; s < samples; ++s) {
      const Index x = pick(rng), y = pick(rng);
      if (!fn(x, y)) return std::array<Index, 3>{x, y, 0};
    }
    return std::nullopt;
  }

  std::size_t count(int arity) const {
    if (sampled) return samples;
    std::size_t c = 1;
    for (int i = 0; i < arity; ++i) c *= n;
    return c;
  }
};

}  // namespace

RingReport validate_ring(const FiniteRing& r, std::size_t exhaustive_cap,
                         std::size_t samples, std::uint64_t seed) {
  RingReport report;
  const bool sampled = r.order() > exhaustive_cap;
  report.sampled = sampled;
  report.seed = seed;

  auto run = [&](const std::string& law, int arity,
                 const std::function<bool(Index, Index, Index)>& fn) {
    TupleSource src(r.order(), sampled, samples, seed);
    std::optional<std::array<Index, 3>> bad;
    if (arity == 3)
      bad = src.sweep3([&](Index x, Index y, Index z) { return fn(x, y, z); });
    else if (arity == 2)
      bad = src.sweep2([&](Index x, Index y) { return fn(x, y, 0); });
    else {
      for (Index x = 0; x < r.order(); ++x)
        if (!fn(x, 0, 0)) {
          bad = std::array<Index, 3>{x, 0, 0};
          break;
        }
    }
    RingLawResult res;
    res.law = law;
    res.passed = !bad.has_value();
    res.cases = arity == 1 ? r.order() : src.count(arity);
    if (bad) {
      std::ostringstream os;
      os << "x=" << r.element_name((*bad)[0]);
      if (arity >= 2) os << ", y=" << r.element_name((*bad)[1]);
      if (arity >= 3) os << ", z=" << r.element_name((*bad)[2]);
      res.counterexample = os.str();
    }
    report.laws.push_back(std::move(res));
  };

  run("add-associative", 3, [&](Index x, Index y, Index z) {
    return r.add(r.add(x, y), z) == r.add(x, r.add(y, z));
  });
  run("add-commutative", 2, [&](Index x, Index y, Index) {
    return r.add(x, y) == r.add(y, x);
  });
  run("add-identity", 1, [&](Index x, Index, Index) {
    return r.add(x, r.zero()) == x;
  });
  run("add-inverse", 1, [&](Index x, Index, Index) {
    return r.add(x, r.neg(x)) == r.zero();
  });
  run("mul-associative", 3, [&](Index x, Index y, Index z) {
    return r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z));
  });
  run("mul-commutative", 2, [&](Index x, Index y, Index) {
    return r.mul(x, y) == r.mul(y, x);
  });
  run("mul-identity", 1, [&](Index x, Index, Index) {
    return r.mul(x, r.one()) == x;
  });
  run("distributive", 3, [&](Index x, Index y, Index z) {
    return r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z));
  });

  report.all_passed = std::all_of(report.laws.begin(), report.laws.end(),
                                  [](const RingLawResult& l) { return l.passed; });
  return report;
}

}  // namespace meadows
