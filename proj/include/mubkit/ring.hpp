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

// Finite commutative rings with unity, stored as Cayley tables.
//
// Elements are the indices 0..order-1. Everything here is brute force over the
// tables; orders are bounded (256 by default, MUBKIT_MAX_ORDER to override).

#ifndef MUBKIT_RING_HPP_
#define MUBKIT_RING_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mubkit/numtheory.hpp"

namespace mubkit {

class GfField;
class Gr4Ring;

using ElementId = std::uint32_t;
/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<ElementId>;

/// Where a table came from. Lets callers recover structured arithmetic
/// (traces, Teichmuller sets) for rings built from the catalog.
struct RingOrigin {
  enum class Kind { kTables, kIntegersMod, kGaloisField, kGaloisRing4, kDualNumbers, kProduct };
  Kind kind = Kind::kTables;
  std::uint32_t a = 0;  // m for Z_m, p for GF/dual, unused otherwise
  std::uint32_t b = 0;  // n for GF(p^n) and GR(4,n)
};

class FiniteRing {
 public:
  /// Validates the ring axioms, including commutativity. Throws InvalidArgument
  /// naming the first violated axiom; ResourceLimit above `max_order`.
  static FiniteRing from_tables(std::size_t order, std::vector<ElementId> add, std::vector<ElementId> mul, ElementId zero,
                                ElementId one, std::string name = "", RingOrigin origin = {},
                                std::vector<std::string> labels = {}, std::uint64_t max_order = ring_order_limit());

  std::size_t order() const { return order_; }
  ElementId zero() const { return zero_; }
  ElementId one() const { return one_; }
  const std::string& name() const { return name_; }
  const RingOrigin& origin() const { return origin_; }
  std::string label(ElementId x) const;

  ElementId add(ElementId a, ElementId b) const { return add_[a * order_ + b]; }
  ElementId mul(ElementId a, ElementId b) const { return mul_[a * order_ + b]; }
  ElementId neg(ElementId a) const { return neg_[a]; }
  ElementId sub(ElementId a, ElementId b) const { return add(a, neg(b)); }
  /// k-fold sum a + ... + a.
  ElementId multiple(std::uint64_t k, ElementId a) const;
  ElementId pow(ElementId a, std::uint64_t e) const;

  std::uint64_t additive_order(ElementId a) const;
  /// Exponent of (R, +): the root order used for exact characters.
  std::uint64_t additive_exponent() const { return exponent_; }

  bool operator==(const FiniteRing& o) const {
    return order_ == o.order_ && zero_ == o.zero_ && one_ == o.one_ && add_ == o.add_ && mul_ == o.mul_;
  }

 private:
  FiniteRing() = default;

  std::size_t order_ = 0;
  std::vector<ElementId> add_;
  std::vector<ElementId> mul_;
  std::vector<ElementId> neg_;
  ElementId zero_ = 0;
  ElementId one_ = 0;
  std::uint64_t exponent_ = 1;
  std::string name_;
  RingOrigin origin_;
  std::vector<std::string> labels_;
};

FiniteRing ring_from_zn(std::uint64_t m, std::uint64_t max_order = ring_order_limit());
/// Pairs (a, b) indexed a * |R2| + b.
FiniteRing ring_product(const FiniteRing& r1, const FiniteRing& r2, std::uint64_t max_order = ring_order_limit());
/// Z_p[x]/(x^2); a + b x indexed a * p + b.
FiniteRing ring_dual_numbers(std::uint64_t p, std::uint64_t max_order = ring_order_limit());
/// Table export of a structured field/ring; indices agree with GfField::index_of / Gr4Ring::index_of.
FiniteRing ring_from_gf(const GfField& f, std::uint64_t max_order = ring_order_limit());
FiniteRing ring_from_gr4(const Gr4Ring& r, std::uint64_t max_order = ring_order_limit());

/// Catalog names: "zN", "gf:p,n", "gr4:n", "zp_dual:p", "prod:A,B".
FiniteRing ring_from_catalog(const std::string& spec, std::uint64_t max_order = ring_order_limit());

/// Direct sum of ideals R = R_1 + ... + R_k given by orthogonal idempotents.
struct RingDecomposition {
  std::vector<ElementSet> components;
  std::vector<ElementId> unities;  // e_i, idempotent, e_i e_j = 0, sum = 1

  /// Validates the idempotents and builds R e_i. Throws InvalidArgument if they
  /// are not a complete orthogonal family.
  static RingDecomposition from_unities(const FiniteRing& r, std::vector<ElementId> unities);

  std::size_t size() const { return components.size(); }
  /// Component of x in part i, i.e. x e_i.
  ElementId project(const FiniteRing& r, ElementId x, std::size_t i) const { return r.mul(x, unities[i]); }
};

/// One component per prime p | |R|: {x : p^e x = 0}. Requires |R| > 1.
RingDecomposition ring_sylow(const FiniteRing& r);
/// Two components: Sylow parts for primes dividing d1, and the rest.
RingDecomposition ring_coprime_split(const FiniteRing& r, std::uint64_t d1);

ElementSet ring_nilradical(const FiniteRing& r);

struct UnitGroup {
  ElementSet units;
  std::vector<std::optional<ElementId>> inverse;  // indexed by element

  bool is_unit(ElementId x) const { return inverse[x].has_value(); }
};

/// Also checks that (1 + n) * u_t(-n) = 1 for every nilpotent n, where
/// u_t(x) = 1 + x + ... + x^(t-1) and n^t = 0.
UnitGroup ring_units(const FiniteRing& r);

/// A multiplicatively closed transversal S to a nilpotent ideal N. Only
/// obtainable through transversal_check, so holding one means it was validated.
class TransversalSet {
 public:
  const ElementSet& elements() const { return s_; }
  const ElementSet& ideal() const { return n_; }
  std::size_t size() const { return s_.size(); }

 private:
  friend TransversalSet transversal_check(const FiniteRing&, ElementSet, ElementSet);
  ElementSet s_;
  ElementSet n_;
};

/// Throws ValidationError (kNotSubgroup, kNotIdeal, kNotNilpotent, kNotClosed,
/// kNotTransversal) with witness elements.
TransversalSet transversal_check(const FiniteRing& r, ElementSet s, ElementSet n);

/// The generalized Teichmuller set: in each Sylow p-part, the fixed points of
/// x -> x^(p^a) for a large enough. Transversal to Nil(R).
TransversalSet teichmuller_transversal(const FiniteRing& r);

struct TransversalSplit {
  ElementSet first;   // S intersect R_1
  ElementSet second;  // S intersect R_2
  ElementSet first_ideal;
  ElementSet second_ideal;
};

/// Splits S along a two-component decomposition and checks every consequence
/// of the splitting proposition. Throws PropertyViolation with a witness.
TransversalSplit transversal_split(const FiniteRing& r, const TransversalSet& t, const RingDecomposition& d);

/// Additive character x -> exp(2 pi i exponents[x] / root_order).
struct AdditiveCharacter {
  std::uint32_t root_order = 1;
  std::vector<std::uint32_t> exponents;

  std::uint32_t operator()(ElementId x) const { return exponents[x]; }
  bool operator==(const AdditiveCharacter&) const = default;
};

bool is_character_of(const FiniteRing& r, const AdditiveCharacter& chi);

/// The dual of (R, +), built from a chain of cyclic extensions. Characters are
/// indexed 0..|R|-1 in a fixed mixed-radix order; index 0 is trivial.
class CharacterGroup {
 public:
  explicit CharacterGroup(const FiniteRing& r);

  std::size_t size() const { return size_; }
  std::uint32_t root_order() const { return root_order_; }
  AdditiveCharacter character(std::uint64_t index) const;
  /// Throws ResourceLimit above the enumeration bound; use sample() there.
  std::vector<AdditiveCharacter> enumerate(std::uint64_t limit = kDefaultCharacterEnumerationLimit) const;
  AdditiveCharacter sample(std::mt19937_64& rng) const;

  /// Generators g_1..g_K of the extension chain.
  const std::vector<ElementId>& generators() const { return generators_; }

 private:
  AdditiveCharacter from_digits(const std::vector<std::uint32_t>& digits) const;

  std::size_t size_ = 1;
  std::uint32_t root_order_ = 1;
  std::vector<ElementId> generators_;
  // o_i: smallest o with o * g_i in the span of g_1..g_{i-1}.
  std::vector<std::uint32_t> orders_;
  // Coordinates of o_i * g_i in terms of g_1..g_{i-1}.
  std::vector<std::vector<std::uint32_t>> relations_;
  // x = sum_i coords_[x][i] * g_i with coords_[x][i] < o_i, unique.
  std::vector<std::vector<std::uint32_t>> coords_;
};

CharacterGroup ring_characters(const FiniteRing& r);

std::string format_set(const FiniteRing& r, const ElementSet& s);
/// Parses "0,1,4" as element indices; sorts and dedupes.
ElementSet parse_element_set(const FiniteRing& r, const std::string& text);

}  // namespace mubkit

#endif  // MUBKIT_RING_HPP_
