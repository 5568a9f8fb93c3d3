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

// Exact cyclotomic integers Z[zeta_m], stored reduced modulo Phi_m.

#ifndef MUBKIT_CYCLO_HPP_
#define MUBKIT_CYCLO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mubkit {

/// Phi_m with integer coefficients, constant term first. Cached; thread-safe.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m);

class CycloNumber {
 public:
  /// The integer k in Z[zeta_m].
  static CycloNumber integer(std::uint32_t m, std::int64_t k);
  /// zeta_m^e.
  static CycloNumber root(std::uint32_t m, std::uint64_t e);
  /// sum_e counts[e] zeta_m^e, counts indexed by exponent in [0, m).
  static CycloNumber from_exponent_counts(std::uint32_t m, const std::vector<std::int64_t>& counts);

  std::uint32_t order() const { return m_; }
  /// Length phi(m); canonical, so equality of numbers is equality of vectors.
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  CycloNumber operator+(const CycloNumber& o) const;
  CycloNumber operator-(const CycloNumber& o) const;
  CycloNumber operator*(const CycloNumber& o) const;
  CycloNumber conj() const;

  bool is_zero() const;
  bool equals_integer(std::int64_t k) const;
  /// The value if it lies in Z.
  std::optional<std::int64_t> to_integer() const;
  bool operator==(const CycloNumber& o) const = default;

  std::string to_string() const;

 private:
  CycloNumber(std::uint32_t m, std::vector<std::int64_t> coeffs) : m_(m), coeffs_(std::move(coeffs)) {}
  void check_same(const CycloNumber& o) const;
  /// Reduces a polynomial in zeta of any length modulo Phi_m.
  static CycloNumber reduce(std::uint32_t m, std::vector<std::int64_t> poly);

  std::uint32_t m_ = 1;
  std::vector<std::int64_t> coeffs_;
};

/// |z|^2 = z * conj(z) for z = sum_e counts[e] zeta_m^e, computed in the group
/// ring first and reduced once.
CycloNumber norm_squared_from_counts(std::uint32_t m, const std::vector<std::int64_t>& counts);

}  // namespace mubkit

#endif  // MUBKIT_CYCLO_HPP_
