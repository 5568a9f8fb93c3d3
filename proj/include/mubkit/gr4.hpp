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

// Galois rings GR(4, n) = Z_4[y] / (h), with h the Graeffe lift of the GF(2^n)
// modulus. Elements are indexed by sum c_i 4^i, as in gf.hpp.

#ifndef MUBKIT_GR4_HPP_
#define MUBKIT_GR4_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mubkit/numtheory.hpp"

namespace mubkit {

struct Gr4Element {
  std::vector<std::uint32_t> coeffs;  // length n, entries in [0, 4)

  auto operator<=>(const Gr4Element&) const = default;
};

/// The unique decomposition r = t0 + 2 t1 with t0, t1 Teichmuller.
struct TeichSplit {
  Gr4Element t0;
  Gr4Element t1;
};

class Gr4Ring {
 public:
  /// Throws InvalidArgument for n = 0, ResourceLimit when 4^n > max_elements.
  static Gr4Ring make(unsigned n, std::uint64_t max_elements = kDefaultFieldLimit);

  unsigned degree() const { return n_; }
  std::uint64_t size() const { return size_; }
  /// Monic, constant term first; reduces mod 2 to the GF(2^n) modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Gr4Element zero() const;
  Gr4Element one() const;
  Gr4Element element(std::uint64_t index) const;
  std::uint64_t index_of(const Gr4Element& a) const;
  bool contains(const Gr4Element& a) const;

  Gr4Element add(const Gr4Element& a, const Gr4Element& b) const;
  Gr4Element sub(const Gr4Element& a, const Gr4Element& b) const;
  Gr4Element neg(const Gr4Element& a) const;
  Gr4Element scale(std::uint32_t k, const Gr4Element& a) const;
  Gr4Element mul(const Gr4Element& a, const Gr4Element& b) const;
  Gr4Element pow(const Gr4Element& a, std::uint64_t e) const;

  /// All t with t^(2^n) = t: 0, 1, then the rest in ascending index.
  const std::vector<Gr4Element>& teichmuller() const { return teich_; }
  bool is_teichmuller(const Gr4Element& a) const;

  TeichSplit split(const Gr4Element& r) const;
  /// t0 + 2 t1  ->  t0^2 + 2 t1^2.
  Gr4Element frobenius(const Gr4Element& r) const;
  /// Sum of the n Frobenius conjugates, as a residue mod 4.
  std::uint32_t trace(const Gr4Element& r) const;

  std::string to_string(const Gr4Element& a) const;

 private:
  Gr4Ring() = default;
  void check(const Gr4Element& a) const;
  std::uint64_t residue_index(const Gr4Element& a) const;

  unsigned n_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Gr4Element> teich_;
  std::vector<std::size_t> teich_by_residue_;  // mod-2 pattern index -> position in teich_
};

}  // namespace mubkit

#endif  // MUBKIT_GR4_HPP_
