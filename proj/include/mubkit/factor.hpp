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

// Splitting product bases of C^{N1 N2} into bases of C^{N1} and C^{N2}.
//
// Vector (i, j) sits at index i * N2 + j and, reshaped row-major to an N1 x N2
// array, must equal a_i b_j^T. In the exact path a_i is kept unnormalized with
// unit-modulus entries (L_a = |a|^2 = N1) and b_j absorbs the 1/sqrt(N) scale
// (L_b = 1/N1); the identities L_a L_b = 1 and L_a L_a' = N1 K_A^2 are then
// checked as rationals.

#ifndef MUBKIT_FACTOR_HPP_
#define MUBKIT_FACTOR_HPP_

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "mubkit/mub.hpp"
#include "mubkit/verify.hpp"

namespace mubkit {

using Rational = boost::rational<std::int64_t>;

struct FactorResult {
  Basis a;  // dim N1, first component of every vector has exponent 0
  Basis b;  // dim N2
  Rational l_a;
  Rational l_b;
};

/// Throws NotAProduct for a vector of rank > 1, LabelingError when a_i depends
/// on j or b_j on i, InvalidArgument when dim != n1 * n2.
FactorResult factor_tensor_basis(const Basis& basis, std::size_t n1, std::size_t n2);

struct PairConstants {
  std::size_t first = 0;
  std::size_t second = 0;
  /// |<a, a'>|^2 at the first vector pair; `constant` records whether every
  /// vector pair agrees and the value is rational.
  Rational k_a_sq;
  Rational k_b_sq;
  bool constant = true;
  bool a_identity = true;  // L_a L_a' = N1 K_A^2
  bool b_identity = true;  // L_b L_b' = N2 K_B^2
};

struct FamilyFactorResult {
  MubFamily a;
  MubFamily b;
  std::vector<FactorResult> per_basis;
  std::vector<PairConstants> pairs;

  /// L_a L_b = 1 for every basis and both pair identities for every pair.
  bool identities_hold() const;
};

FamilyFactorResult factor_tensor_family(const MubFamily& f, std::size_t n1, std::size_t n2);

struct FloatFactorResult {
  FloatBasis a;  // unit vectors, first nonzero component real positive
  FloatBasis b;
  double l_a = 0.0;
  double l_b = 0.0;
  double worst_singular_ratio = 0.0;  // max over vectors of sigma_2 / sigma_1
};

/// Rank one means sigma_2 <= tol * sigma_1.
FloatFactorResult factor_tensor_basis(const FloatBasis& basis, std::size_t n1, std::size_t n2,
                                      double tol = kDefaultTolerance);

}  // namespace mubkit

#endif  // MUBKIT_FACTOR_HPP_
