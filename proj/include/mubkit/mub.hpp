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

// Bases of C^N whose vectors are either canonical unit vectors or phase
// vectors (zeta_m^{e_0}, ..., zeta_m^{e_{N-1}}) / sqrt(N), and the generators
// that produce families of them.

#ifndef MUBKIT_MUB_HPP_
#define MUBKIT_MUB_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mubkit/ring.hpp"

namespace mubkit {

class GfField;
class Gr4Ring;

struct PhaseVector {
  std::uint32_t root_order = 1;
  std::vector<std::uint32_t> exponents;  // entries in [0, root_order)

  std::size_t dim() const { return exponents.size(); }
  bool operator==(const PhaseVector&) const = default;
};

class Basis {
 public:
  enum class Kind { kStandard, kPhase };

  static Basis standard(std::size_t dim, std::string label = "standard");
  /// N rows of N exponents each. Throws InvalidArgument on shape or range errors.
  static Basis phase(std::uint32_t root_order, std::vector<std::vector<std::uint32_t>> rows, std::string label = "");

  Kind kind() const { return kind_; }
  bool is_standard() const { return kind_ == Kind::kStandard; }
  std::size_t dim() const { return dim_; }
  /// 1 for the standard basis.
  std::uint32_t root_order() const { return root_order_; }
  const std::vector<std::vector<std::uint32_t>>& exponents() const { return rows_; }
  PhaseVector vector(std::size_t k) const { return {root_order_, rows_.at(k)}; }
  const std::string& label() const { return label_; }

  /// Same basis at root order m' (a multiple of root_order()).
  Basis lifted(std::uint32_t m) const;
  /// Same basis at the smallest root order that represents it.
  Basis reduced() const;

  bool operator==(const Basis& o) const {
    return kind_ == o.kind_ && dim_ == o.dim_ && root_order_ == o.root_order_ && rows_ == o.rows_;
  }

 private:
  Kind kind_ = Kind::kStandard;
  std::size_t dim_ = 0;
  std::uint32_t root_order_ = 1;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::string label_;
};

class MubFamily {
 public:
  /// Throws InvalidArgument on a dimension mismatch or a second standard basis.
  static MubFamily make(std::size_t dim, std::vector<Basis> bases, std::string provenance = "");

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return bases_.size(); }
  const std::vector<Basis>& bases() const { return bases_; }
  const Basis& operator[](std::size_t i) const { return bases_[i]; }
  const std::string& provenance() const { return provenance_; }
  /// lcm of the phase bases' root orders; 1 if there are none.
  std::uint32_t root_order() const;

  MubFamily subfamily(const std::vector<std::size_t>& indices) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Basis> bases_;
  std::string provenance_;
};

/// c * k^a * l^b with c a ring element.
struct Monomial {
  ElementId coeff = 0;
  unsigned k_degree = 0;
  unsigned l_degree = 0;

  bool operator==(const Monomial&) const = default;
};

/// One basis recipe: vector k, component l has exponent chi(P(k, l)) where
/// P = constant + sum of terms.
struct FormulaSpec {
  AdditiveCharacter character;
  std::vector<Monomial> terms;
  ElementId constant = 0;
  std::string label;
};

inline constexpr unsigned kDefaultDegreeBound = 3;

ElementId evaluate_polynomial(const FiniteRing& r, const FormulaSpec& spec, ElementId k, ElementId l);

Basis mub_standard(std::size_t dim);

/// Quadratic trace family over GF(p^n), p odd: N+1 bases at root order p.
MubFamily mub_wf_odd(std::uint32_t p, unsigned n, std::uint64_t max_elements = kDefaultFieldLimit);
/// Cubic variant (l + r)^3 + k (l + r); p >= 5.
MubFamily mub_cubic(std::uint32_t p, unsigned n, std::uint64_t max_elements = kDefaultFieldLimit);
/// Galois-ring family over GR(4,n) indexed by the Teichmuller set; root order 4.
MubFamily mub_kr_even(unsigned n, std::uint64_t max_elements = kDefaultFieldLimit);

/// Standard basis plus one candidate basis per spec, indexed by S in ascending
/// order. No unbiasedness is asserted. Throws InvalidArgument when a character
/// does not belong to R, or a term exceeds the degree bound.
MubFamily mub_generalized(const FiniteRing& r, const TransversalSet& t, const std::vector<FormulaSpec>& specs,
                          unsigned degree_bound = kDefaultDegreeBound);

/// Candidate basis for a single spec; the character is trusted.
Basis formula_basis(const FiniteRing& r, const ElementSet& s, const FormulaSpec& spec);

/// First min(|F1|, |F2|) bases paired index by index. Vector (i, j) is
/// a_i (x) b_j with index i * N2 + j. Standard (x) standard is standard; a
/// standard paired with a phase basis has no phase form and throws InvalidArgument.
MubFamily mub_tensor(const MubFamily& f1, const MubFamily& f2);

/// Tr as an additive character of the table export of the field.
AdditiveCharacter trace_character(const GfField& f);
AdditiveCharacter trace_character(const Gr4Ring& g);
/// Specs realizing Tr(r l^2 + k l), r in field order, over ring_from_gf(f).
std::vector<FormulaSpec> quadratic_trace_specs(const GfField& f);
/// Specs realizing Tr((r + 2k) l), r in Teichmuller order, over ring_from_gr4(g).
std::vector<FormulaSpec> galois_ring_trace_specs(const Gr4Ring& g);

}  // namespace mubkit

#endif  // MUBKIT_MUB_HPP_
