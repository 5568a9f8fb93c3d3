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

// Finite fields GF(p^n) in the power basis of a fixed monic irreducible modulus.
//
// The modulus is the first monic irreducible of degree n when candidates are
// scanned by their integer encoding sum c_i p^i (constant term is the least
// significant digit). Elements use the same encoding for their index, so
// "field order" below always means ascending index.

#ifndef MUBKIT_GF_HPP_
#define MUBKIT_GF_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mubkit/numtheory.hpp"

namespace mubkit {

struct GfElement {
  std::vector<std::uint32_t> coeffs;  // length n, entries in [0, p)

  auto operator<=>(const GfElement&) const = default;
};

class GfField {
 public:
  /// Throws InvalidArgument for non-prime p or n = 0, ResourceLimit when p^n > max_elements.
  static GfField make(std::uint32_t p, unsigned n, std::uint64_t max_elements = kDefaultFieldLimit);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint64_t size() const { return size_; }
  /// n + 1 coefficients, constant term first, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  GfElement zero() const;
  GfElement one() const;
  GfElement element(std::uint64_t index) const;
  std::uint64_t index_of(const GfElement& a) const;
  bool contains(const GfElement& a) const;

  GfElement add(const GfElement& a, const GfElement& b) const;
  GfElement sub(const GfElement& a, const GfElement& b) const;
  GfElement neg(const GfElement& a) const;
  GfElement mul(const GfElement& a, const GfElement& b) const;
  GfElement pow(const GfElement& a, std::uint64_t e) const;
  /// Throws InvalidArgument for zero.
  GfElement inverse(const GfElement& a) const;
  GfElement frobenius(const GfElement& a) const { return pow(a, p_); }

  /// Trace onto the prime field, as a residue mod p.
  std::uint32_t trace(const GfElement& a) const;
  /// a + a^p + ... + a^{p^{n-1}} evaluated directly. Used to fill the trace cache.
  std::uint32_t trace_by_frobenius(const GfElement& a) const;

  std::string to_string(const GfElement& a) const;

 private:
  GfField() = default;
  void check(const GfElement& a) const;

  std::uint32_t p_ = 0;
  unsigned n_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> basis_trace_;  // Tr(x^i), i < n
};

/// Exhaustive trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace mubkit

#endif  // MUBKIT_GF_HPP_
