// Copyright 2026 The mubkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mubkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "mubkit/errors.hpp"
#include "mubkit/gf.hpp"
#include "mubkit/gr4.hpp"

namespace mubkit {

namespace {

std::string id(ElementId x) { return std::to_string(x); }

void normalize(ElementSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool contains(const ElementSet& s, ElementId x) { return std::binary_search(s.begin(), s.end(), x); }

void check_order(std::uint64_t order, std::uint64_t max_order, const std::string& what) {
  if (order > max_order) {
    throw ResourceLimit(what + ": order " + std::to_string(order) + " exceeds the table bound " + std::to_string(max_order) +
                        " (raise MUBKIT_MAX_ORDER to override)");
  }
}

std::uint64_t parse_uint(const std::string& s, const std::string& context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidArgument("ring catalog: expected a number in '" + context + "'");
  }
  return std::stoull(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteRing

FiniteRing FiniteRing::from_tables(std::size_t order, std::vector<ElementId> add, std::vector<ElementId> mul,
                                   ElementId zero, ElementId one, std::string name, RingOrigin origin,
                                   std::vector<std::string> labels, std::uint64_t max_order) {
  if (order == 0) throw InvalidArgument("ring: order must be >= 1");
  check_order(order, max_order, "ring");
  const std::size_t n = order;
  if (add.size() != n * n || mul.size() != n * n) throw InvalidArgument("ring: tables must be order x order");
  if (zero >= n || one >= n) throw InvalidArgument("ring: zero/one out of range");
  if (!labels.empty() && labels.size() != n) throw InvalidArgument("ring: label count does not match order");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add[i] >= n || mul[i] >= n) throw InvalidArgument("ring: table entry out of range");
  }
  auto A = [&](ElementId a, ElementId b) { return add[a * n + b]; };
  auto M = [&](ElementId a, ElementId b) { return mul[a * n + b]; };

  std::vector<ElementId> neg(n, 0);
  for (ElementId a = 0; a < n; ++a) {
    if (A(zero, a) != a) throw InvalidArgument("ring: " + id(zero) + " is not an additive identity");
    if (M(one, a) != a) throw InvalidArgument("ring: " + id(one) + " is not a multiplicative identity");
    bool found = false;
    for (ElementId b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) throw InvalidArgument("ring: addition is not commutative at " + id(a) + ", " + id(b));
      if (M(a, b) != M(b, a)) {
        throw InvalidArgument("ring: multiplication is not commutative at " + id(a) + ", " + id(b) +
                              " (only commutative rings are supported)");
      }
      if (!found && A(a, b) == zero) {
        neg[a] = b;
        found = true;
      }
    }
    if (!found) throw InvalidArgument("ring: " + id(a) + " has no additive inverse");
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const ElementId ab_sum = A(a, b);
      const ElementId ab_prod = M(a, b);
      for (ElementId c = 0; c < n; ++c) {
        if (A(ab_sum, c) != A(a, A(b, c))) throw InvalidArgument("ring: addition is not associative");
        if (M(ab_prod, c) != M(a, M(b, c))) throw InvalidArgument("ring: multiplication is not associative");
        if (M(a, A(b, c)) != A(ab_prod, M(a, c))) throw InvalidArgument("ring: multiplication does not distribute");
      }
    }
  }

  FiniteRing r;
  r.order_ = n;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.neg_ = std::move(neg);
  r.zero_ = zero;
  r.one_ = one;
  r.name_ = std::move(name);
  r.origin_ = origin;
  r.labels_ = std::move(labels);
  std::uint64_t e = 1;
  for (ElementId a = 0; a < n; ++a) e = std::lcm(e, r.additive_order(a));
  r.exponent_ = e;
  return r;
}

std::string FiniteRing::label(ElementId x) const { return labels_.empty() ? id(x) : labels_[x]; }

ElementId FiniteRing::multiple(std::uint64_t k, ElementId a) const {
  ElementId result = zero_;
  ElementId base = a;
  while (k) {
    if (k & 1) result = add(result, base);
    k >>= 1;
    if (k) base = add(base, base);
  }
  return result;
}

ElementId FiniteRing::pow(ElementId a, std::uint64_t e) const {
  ElementId result = one_;
  ElementId base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

std::uint64_t FiniteRing::additive_order(ElementId a) const {
  std::uint64_t k = 1;
  for (ElementId y = a; y != zero_; y = add(y, a)) ++k;
  return k;
}

// ---------------------------------------------------------------------------
// Constructors and catalog

FiniteRing ring_from_zn(std::uint64_t m, std::uint64_t max_order) {
  if (m == 0) throw InvalidArgument("ring: Z_0 is not finite");
  check_order(m, max_order, "z" + std::to_string(m));
  const auto n = static_cast<std::size_t>(m);
  std::vector<ElementId> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<ElementId>((a + b) % n);
      mul[a * n + b] = static_cast<ElementId>((a * b) % n);
    }
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), 0, static_cast<ElementId>(1 % n),
                                 "z" + std::to_string(m), {RingOrigin::Kind::kIntegersMod, static_cast<std::uint32_t>(m), 0},
                                 {}, max_order);
}

FiniteRing ring_product(const FiniteRing& r1, const FiniteRing& r2, std::uint64_t max_order) {
  const std::size_t n1 = r1.order(), n2 = r2.order();
  const std::size_t n = n1 * n2;
  check_order(n, max_order, "prod");
  std::vector<ElementId> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto a1 = static_cast<ElementId>(x / n2), a2 = static_cast<ElementId>(x % n2);
    labels[x] = "(" + r1.label(a1) + "," + r2.label(a2) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto b1 = static_cast<ElementId>(y / n2), b2 = static_cast<ElementId>(y % n2);
      add[x * n + y] = static_cast<ElementId>(r1.add(a1, b1) * n2 + r2.add(a2, b2));
      mul[x * n + y] = static_cast<ElementId>(r1.mul(a1, b1) * n2 + r2.mul(a2, b2));
    }
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), static_cast<ElementId>(r1.zero() * n2 + r2.zero()),
                                 static_cast<ElementId>(r1.one() * n2 + r2.one()), "prod:" + r1.name() + "," + r2.name(),
                                 {RingOrigin::Kind::kProduct, 0, 0}, std::move(labels), max_order);
}

FiniteRing ring_dual_numbers(std::uint64_t p, std::uint64_t max_order) {
  if (!is_prime(p)) throw InvalidArgument("ring: zp_dual needs a prime, got " + std::to_string(p));
  const std::size_t n = p * p;
  check_order(n, max_order, "zp_dual:" + std::to_string(p));
  std::vector<ElementId> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a = x / p, b = x % p;
    labels[x] = std::to_string(a) + "+" + std::to_string(b) + "x";
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t c = y / p, d = y % p;
      add[x * n + y] = static_cast<ElementId>(((a + c) % p) * p + (b + d) % p);
      // (a + b x)(c + d x) = ac + (ad + bc) x
      mul[x * n + y] = static_cast<ElementId>(((a * c) % p) * p + (a * d + b * c) % p);
    }
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), 0, static_cast<ElementId>(p),
                                 "zp_dual:" + std::to_string(p),
                                 {RingOrigin::Kind::kDualNumbers, static_cast<std::uint32_t>(p), 0}, std::move(labels),
                                 max_order);
}

FiniteRing ring_from_gf(const GfField& f, std::uint64_t max_order) {
  const std::string name = "gf:" + std::to_string(f.characteristic()) + "," + std::to_string(f.degree());
  check_order(f.size(), max_order, name);
  const auto n = static_cast<std::size_t>(f.size());
  std::vector<GfElement> elems;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(f.element(i));
    labels.push_back(f.to_string(elems.back()));
  }
  std::vector<ElementId> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<ElementId>(f.index_of(f.add(elems[a], elems[b])));
      mul[a * n + b] = static_cast<ElementId>(f.index_of(f.mul(elems[a], elems[b])));
    }
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), 0, static_cast<ElementId>(f.index_of(f.one())), name,
                                 {RingOrigin::Kind::kGaloisField, f.characteristic(), f.degree()}, std::move(labels),
                                 max_order);
}

FiniteRing ring_from_gr4(const Gr4Ring& g, std::uint64_t max_order) {
  const std::string name = "gr4:" + std::to_string(g.degree());
  check_order(g.size(), max_order, name);
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<Gr4Element> elems;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(g.element(i));
    labels.push_back(g.to_string(elems.back()));
  }
  std::vector<ElementId> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<ElementId>(g.index_of(g.add(elems[a], elems[b])));
      mul[a * n + b] = static_cast<ElementId>(g.index_of(g.mul(elems[a], elems[b])));
    }
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), 0, static_cast<ElementId>(g.index_of(g.one())), name,
                                 {RingOrigin::Kind::kGaloisRing4, 4, g.degree()}, std::move(labels), max_order);
}

FiniteRing ring_from_catalog(const std::string& spec, std::uint64_t max_order) {
  if (spec.rfind("prod:", 0) == 0) {
    const std::string rest = spec.substr(5);
    // Operands may contain commas themselves; take the first split where both sides parse.
    for (std::size_t pos = rest.find(','); pos != std::string::npos; pos = rest.find(',', pos + 1)) {
      std::optional<FiniteRing> left, right;
      try {
        left = ring_from_catalog(rest.substr(0, pos), max_order);
        right = ring_from_catalog(rest.substr(pos + 1), max_order);
      } catch (const InvalidArgument&) {
        continue;
      }
      return ring_product(*left, *right, max_order);
    }
    throw InvalidArgument("ring catalog: cannot parse product '" + spec + "'");
  }
  if (spec.rfind("gf:", 0) == 0) {
    const std::string rest = spec.substr(3);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw InvalidArgument("ring catalog: expected gf:p,n in '" + spec + "'");
    const auto p = parse_uint(rest.substr(0, comma), spec);
    const auto n = parse_uint(rest.substr(comma + 1), spec);
    if (p > UINT32_MAX || n > 64) throw InvalidArgument("ring catalog: parameters too large in '" + spec + "'");
    return ring_from_gf(GfField::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(n), max_order), max_order);
  }
  if (spec.rfind("gr4:", 0) == 0) {
    const auto n = parse_uint(spec.substr(4), spec);
    if (n > 64) throw InvalidArgument("ring catalog: degree too large in '" + spec + "'");
    return ring_from_gr4(Gr4Ring::make(static_cast<unsigned>(n), max_order), max_order);
  }
  if (spec.rfind("zp_dual:", 0) == 0) return ring_dual_numbers(parse_uint(spec.substr(8), spec), max_order);
  if (spec.size() >= 2 && (spec[0] == 'z' || spec[0] == 'Z')) return ring_from_zn(parse_uint(spec.substr(1), spec), max_order);
  throw InvalidArgument("ring catalog: unknown ring '" + spec + "'");
}

// ---------------------------------------------------------------------------
// Decompositions

RingDecomposition RingDecomposition::from_unities(const FiniteRing& r, std::vector<ElementId> unities) {
  ElementId sum = r.zero();
  for (std::size_t i = 0; i < unities.size(); ++i) {
    const ElementId e = unities[i];
    if (e >= r.order()) throw InvalidArgument("decomposition: unity out of range");
    if (r.mul(e, e) != e) throw InvalidArgument("decomposition: " + r.label(e) + " is not idempotent");
    for (std::size_t j = i + 1; j < unities.size(); ++j) {
      if (r.mul(e, unities[j]) != r.zero()) {
        throw InvalidArgument("decomposition: unities " + r.label(e) + " and " + r.label(unities[j]) + " are not orthogonal");
      }
    }
    sum = r.add(sum, e);
  }
  if (sum != r.one()) throw InvalidArgument("decomposition: unities do not sum to 1");

  RingDecomposition d;
  d.unities = std::move(unities);
  for (ElementId e : d.unities) {
    ElementSet comp;
    for (ElementId x = 0; x < r.order(); ++x) comp.push_back(r.mul(x, e));
    normalize(comp);
    d.components.push_back(std::move(comp));
  }
  return d;
}

namespace {

// e_p = c * 1 with c = 1 mod p^e, c = 0 mod |R| / p^e.
ElementId sylow_unity(const FiniteRing& r, const PrimePower& pp) {
  const std::uint64_t order = r.order();
  const std::uint64_t q = pp.value();
  const std::uint64_t cofactor = order / q;
  const std::uint64_t c = (cofactor * inverse_mod(cofactor % q, q)) % order;
  return r.multiple(c, r.one());
}

}  // namespace

RingDecomposition ring_sylow(const FiniteRing& r) {
  if (r.order() < 2) throw InvalidArgument("ring_sylow: the zero ring has no Sylow decomposition");
  const auto factors = factorize(r.order());
  std::vector<ElementId> unities;
  std::vector<ElementSet> torsion;
  for (const auto& pp : factors) {
    ElementSet s;
    for (ElementId x = 0; x < r.order(); ++x) {
      if (r.multiple(pp.value(), x) == r.zero()) s.push_back(x);
    }
    torsion.push_back(std::move(s));
    unities.push_back(sylow_unity(r, pp));
  }
  auto d = RingDecomposition::from_unities(r, std::move(unities));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (d.components[i] != torsion[i]) {
      throw PropertyViolation("ring_sylow: R e_p differs from the " + std::to_string(factors[i].prime) + "-torsion subgroup");
    }
  }
  return d;
}

RingDecomposition ring_coprime_split(const FiniteRing& r, std::uint64_t d1) {
  if (d1 < 2) throw InvalidArgument("ring_coprime_split: d1 must be >= 2");
  const auto order_factors = factorize(r.order());
  ElementId e1 = r.zero();
  for (const auto& pd : factorize(d1)) {
    auto it = std::find_if(order_factors.begin(), order_factors.end(), [&](const PrimePower& q) { return q.prime == pd.prime; });
    if (it == order_factors.end()) {
      throw InvalidArgument("ring_coprime_split: prime " + std::to_string(pd.prime) + " does not divide |R|");
    }
    e1 = r.add(e1, sylow_unity(r, *it));
  }
  return RingDecomposition::from_unities(r, {e1, r.sub(r.one(), e1)});
}

// ---------------------------------------------------------------------------
// Nilradical, units

namespace {

// Smallest t >= 1 with x^t = 0, or 0 if x is not nilpotent.
std::uint64_t nilpotency_index(const FiniteRing& r, ElementId x) {
  ElementId y = x;
  for (std::uint64_t t = 1; t <= r.order(); ++t) {
    if (y == r.zero()) return t;
    y = r.mul(y, x);
  }
  return 0;
}

}  // namespace

ElementSet ring_nilradical(const FiniteRing& r) {
  ElementSet nil;
  for (ElementId x = 0; x < r.order(); ++x) {
    if (nilpotency_index(r, x) != 0) nil.push_back(x);
  }
  return nil;
}

UnitGroup ring_units(const FiniteRing& r) {
  UnitGroup g;
  g.inverse.assign(r.order(), std::nullopt);
  for (ElementId x = 0; x < r.order(); ++x) {
    for (ElementId y = 0; y < r.order(); ++y) {
      if (r.mul(x, y) == r.one()) {
        g.inverse[x] = y;
        g.units.push_back(x);
        break;
      }
    }
  }
  for (ElementId n = 0; n < r.order(); ++n) {
    const auto t = nilpotency_index(r, n);
    if (t == 0) continue;
    const ElementId minus_n = r.neg(n);
    ElementId u = r.zero();
    ElementId term = r.one();
    for (std::uint64_t i = 0; i < t; ++i) {
      u = r.add(u, term);
      term = r.mul(term, minus_n);
    }
    const ElementId one_plus_n = r.add(r.one(), n);
    if (r.mul(one_plus_n, u) != r.one() || g.inverse[one_plus_n] != u) {
      throw PropertyViolation("ring_units: u_t(-n) is not the inverse of 1+n for n = " + r.label(n));
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Transversals

TransversalSet transversal_check(const FiniteRing& r, ElementSet s, ElementSet n) {
  normalize(s);
  normalize(n);
  for (const auto* set : {&s, &n}) {
    for (ElementId x : *set) {
      if (x >= r.order()) throw InvalidArgument("transversal: element " + id(x) + " out of range");
    }
  }
  using Kind = ValidationError::Kind;

  if (!contains(n, r.zero())) throw ValidationError(Kind::kNotSubgroup, {r.zero()}, "N does not contain 0");
  for (ElementId a : n) {
    for (ElementId b : n) {
      const ElementId c = r.sub(a, b);
      if (!contains(n, c)) {
        throw ValidationError(Kind::kNotSubgroup, {a, b, c},
                              "N is not an additive subgroup: " + r.label(a) + " - " + r.label(b) + " = " + r.label(c) +
                                  " is not in N");
      }
    }
  }
  for (ElementId x = 0; x < r.order(); ++x) {
    for (ElementId a : n) {
      const ElementId c = r.mul(x, a);
      if (!contains(n, c)) {
        throw ValidationError(Kind::kNotIdeal, {x, a, c},
                              "N is not an ideal: " + r.label(x) + "*" + r.label(a) + " = " + r.label(c) + " is not in N");
      }
    }
  }
  for (ElementId a : n) {
    if (nilpotency_index(r, a) == 0) {
      throw ValidationError(Kind::kNotNilpotent, {a}, "N is not nilpotent: " + r.label(a) + " is not nilpotent");
    }
  }
  for (ElementId a : s) {
    for (ElementId b : s) {
      const ElementId c = r.mul(a, b);
      if (!contains(s, c)) {
        throw ValidationError(Kind::kNotClosed, {a, b, c},
                              "S is not closed under multiplication: " + r.label(a) + "*" + r.label(b) + " = " +
                                  r.label(c) + " is not in S");
      }
    }
  }
  // Coset x + N is named by its smallest element.
  std::vector<ElementId> coset(r.order());
  for (ElementId x = 0; x < r.order(); ++x) {
    ElementId best = x;
    for (ElementId a : n) best = std::min(best, r.add(x, a));
    coset[x] = best;
  }
  std::vector<std::vector<ElementId>> hits(r.order());
  for (ElementId a : s) hits[coset[a]].push_back(a);
  for (ElementId x = 0; x < r.order(); ++x) {
    if (coset[x] != x) continue;
    if (hits[x].empty()) {
      throw ValidationError(Kind::kNotTransversal, {x},
                            "S is not a transversal: the coset " + r.label(x) + "+N contains no element of S");
    }
    if (hits[x].size() > 1) {
      throw ValidationError(Kind::kNotTransversal, {hits[x][0], hits[x][1]},
                            "S is not a transversal: " + r.label(hits[x][0]) + " and " + r.label(hits[x][1]) +
                                " lie in the same coset of N");
    }
  }
  TransversalSet t;
  t.s_ = std::move(s);
  t.n_ = std::move(n);
  return t;
}

TransversalSet teichmuller_transversal(const FiniteRing& r) {
  if (r.order() == 1) return transversal_check(r, {r.zero()}, {r.zero()});
  const auto factors = factorize(r.order());
  const auto d = ring_sylow(r);
  ElementSet s;
  for (ElementId x = 0; x < r.order(); ++x) {
    bool fixed = true;
    for (std::size_t i = 0; i < factors.size() && fixed; ++i) {
      const ElementId y = d.project(r, x, i);
      // a = lcm(1..e) is a multiple of every residue degree and large enough
      // that x -> x^(p^a) kills nilpotents and 1 + Nil.
      std::uint64_t a = 1;
      for (unsigned k = 2; k <= factors[i].exponent; ++k) a = std::lcm(a, std::uint64_t{k});
      ElementId z = y;
      for (std::uint64_t step = 0; step < a; ++step) z = r.pow(z, factors[i].prime);
      fixed = (z == y);
    }
    if (fixed) s.push_back(x);
  }
  return transversal_check(r, std::move(s), ring_nilradical(r));
}

TransversalSplit transversal_split(const FiniteRing& r, const TransversalSet& t, const RingDecomposition& d) {
  if (d.size() != 2) throw InvalidArgument("transversal_split: decomposition must have exactly two components");
  const ElementSet& s = t.elements();
  const ElementSet& n = t.ideal();
  auto fail = [](const std::string& what) { throw PropertyViolation("transversal_split: " + what); };

  TransversalSplit out;
  ElementSet* parts[2] = {&out.first, &out.second};
  ElementSet* ideals[2] = {&out.first_ideal, &out.second_ideal};
  for (std::size_t i = 0; i < 2; ++i) {
    const ElementSet& comp = d.components[i];
    std::set_intersection(s.begin(), s.end(), comp.begin(), comp.end(), std::back_inserter(*parts[i]));
    std::set_intersection(n.begin(), n.end(), comp.begin(), comp.end(), std::back_inserter(*ideals[i]));
    const bool nonzero = comp.size() > 1;
    if (nonzero && !contains(s, d.unities[i])) fail("component unity " + r.label(d.unities[i]) + " is not in S");
    if (nonzero && parts[i]->size() < 2) fail("S meets a nonzero component in fewer than two elements");
  }

  for (ElementId x : s) {
    const ElementId x1 = d.project(r, x, 0), x2 = d.project(r, x, 1);
    if (!contains(out.first, x1) || !contains(out.second, x2)) {
      fail("the components of " + r.label(x) + " are not in S");
    }
    if (r.add(x1, x2) != x) fail("x e1 + x e2 != x for x = " + r.label(x));
  }
  for (ElementId a : out.first) {
    for (ElementId b : out.second) {
      if (!contains(s, r.add(a, b))) fail(r.label(a) + " + " + r.label(b) + " is not in S");
    }
  }
  if (out.first.size() * out.second.size() != s.size()) fail("|S| != |S1| |S2|");

  for (std::size_t i = 0; i < 2; ++i) {
    const ElementSet& si = *parts[i];
    const ElementSet& ni = *ideals[i];
    for (ElementId a : si) {
      for (ElementId b : si) {
        if (!contains(si, r.mul(a, b))) fail("S" + std::to_string(i + 1) + " is not closed: " + r.label(a) + "*" + r.label(b));
      }
    }
    for (ElementId x : d.components[i]) {
      std::size_t hits = 0;
      for (ElementId a : si) {
        if (contains(ni, r.sub(a, x))) ++hits;
      }
      if (hits != 1) fail("S" + std::to_string(i + 1) + " is not a transversal at the coset of " + r.label(x));
    }
  }

  const std::uint64_t o1 = d.components[0].size(), o2 = d.components[1].size();
  if (o1 > 1 && o2 > 1 && std::gcd(o1, o2) == 1) {
    std::uint64_t d1 = 1;
    std::uint64_t rest = s.size();
    for (const auto& pp : factorize(o1)) {
      while (rest % pp.prime == 0) {
        rest /= pp.prime;
        d1 *= pp.prime;
      }
    }
    if (out.first.size() != d1 || out.second.size() != rest) {
      fail("coprime cardinality split fails: |S1| = " + std::to_string(out.first.size()) + ", expected " + std::to_string(d1));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characters

bool is_character_of(const FiniteRing& r, const AdditiveCharacter& chi) {
  if (chi.exponents.size() != r.order() || chi.root_order != r.additive_exponent()) return false;
  for (auto e : chi.exponents) {
    if (e >= chi.root_order) return false;
  }
  for (ElementId a = 0; a < r.order(); ++a) {
    for (ElementId b = 0; b < r.order(); ++b) {
      if (chi(r.add(a, b)) != (chi(a) + chi(b)) % chi.root_order) return false;
    }
  }
  return true;
}

CharacterGroup::CharacterGroup(const FiniteRing& r) {
  const std::size_t order = r.order();
  root_order_ = static_cast<std::uint32_t>(r.additive_exponent());
  std::vector<bool> in_span(order, false);
  std::vector<ElementId> span{r.zero()};
  in_span[r.zero()] = true;
  coords_.assign(order, {});

  while (span.size() < order) {
    ElementId g = 0;
    while (in_span[g]) ++g;
    std::uint32_t o = 1;
    ElementId y = g;
    while (!in_span[y]) {
      y = r.add(y, g);
      ++o;
    }
    relations_.push_back(coords_[y]);
    relations_.back().resize(generators_.size(), 0);
    const std::size_t k = generators_.size();
    generators_.push_back(g);
    orders_.push_back(o);

    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) {
      coords_[span[i]].resize(k + 1, 0);
      ElementId x = span[i];
      for (std::uint32_t j = 1; j < o; ++j) {
        x = r.add(x, g);
        if (in_span[x]) throw PropertyViolation("characters: extension chain is not a direct decomposition");
        in_span[x] = true;
        coords_[x] = coords_[span[i]];
        coords_[x][k] = j;
        span.push_back(x);
      }
    }
  }
  for (auto& c : coords_) c.resize(generators_.size(), 0);
  size_ = order;
}

AdditiveCharacter CharacterGroup::from_digits(const std::vector<std::uint32_t>& digits) const {
  const std::uint64_t m = root_order_;
  std::vector<std::uint64_t> values(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < i; ++j) v = (v + std::uint64_t{relations_[i][j]} * values[j]) % m;
    // o * chi(g) must equal chi(o g) = v; there are exactly o solutions.
    const std::uint64_t o = orders_[i];
    if (v % o != 0) throw PropertyViolation("characters: relation value not divisible by generator order");
    values[i] = (v / o + digits[i] * (m / o)) % m;
  }
  AdditiveCharacter chi;
  chi.root_order = root_order_;
  chi.exponents.resize(coords_.size());
  for (std::size_t x = 0; x < coords_.size(); ++x) {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) e = (e + std::uint64_t{coords_[x][i]} * values[i]) % m;
    chi.exponents[x] = static_cast<std::uint32_t>(e);
  }
  return chi;
}

AdditiveCharacter CharacterGroup::character(std::uint64_t index) const {
  if (index >= size_) throw InvalidArgument("characters: index out of range");
  std::vector<std::uint32_t> digits(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    digits[i] = static_cast<std::uint32_t>(index % orders_[i]);
    index /= orders_[i];
  }
  return from_digits(digits);
}

std::vector<AdditiveCharacter> CharacterGroup::enumerate(std::uint64_t limit) const {
  if (size_ > limit) {
    throw ResourceLimit("characters: " + std::to_string(size_) + " characters exceed the enumeration bound " +
                        std::to_string(limit) + "; sample with a seed instead");
  }
  std::vector<AdditiveCharacter> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(character(i));
  return out;
}

AdditiveCharacter CharacterGroup::sample(std::mt19937_64& rng) const {
  std::vector<std::uint32_t> digits(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) digits[i] = static_cast<std::uint32_t>(uniform_below(rng, orders_[i]));
  return from_digits(digits);
}

CharacterGroup ring_characters(const FiniteRing& r) { return CharacterGroup(r); }

// ---------------------------------------------------------------------------

std::string format_set(const FiniteRing& r, const ElementSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    os << r.label(s[i]);
  }
  os << '}';
  return os.str();
}

ElementSet parse_element_set(const FiniteRing& r, const std::string& text) {
  ElementSet out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty()) continue;
    const auto v = parse_uint(tok, text);
    if (v >= r.order()) throw InvalidArgument("element " + tok + " out of range for a ring of order " + std::to_string(r.order()));
    out.push_back(static_cast<ElementId>(v));
  }
  normalize(out);
  return out;
}

}  // namespace mubkit
