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

// Orthonormality and unbiasedness checks.
//
// Exact mode works in Z[zeta_m]: a pair of phase vectors is unbiased iff the
// unscaled sum S = sum_l zeta^{f_l - e_l} satisfies S * conj(S) = N. Float mode
// exists for imported numeric families and compares against a tolerance.

#ifndef MUBKIT_VERIFY_HPP_
#define MUBKIT_VERIFY_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mubkit/cyclo.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/numtheory.hpp"

namespace mubkit {

inline constexpr double kDefaultTolerance = 1e-9;

/// <v, w> = value / sqrt(scale_sq), scale_sq in {1, N, N^2}.
struct ExactInner {
  CycloNumber value;
  std::uint64_t scale_sq;
};

/// Conjugate-linear in the first argument. Throws InvalidArgument on a dimension mismatch.
ExactInner inner_product(const PhaseVector& v, const PhaseVector& w);
ExactInner inner_product(const Basis& a, std::size_t i, const Basis& b, std::size_t j);

struct Witness {
  std::size_t basis_a = 0;
  std::size_t basis_b = 0;
  std::size_t vector_a = 0;
  std::size_t vector_b = 0;
  std::string value;  // offending inner product (or |.|^2) as text
};

/// First failing vector pair, if any.
struct Verdict {
  bool pass = true;
  std::vector<Witness> witnesses;
};

Verdict check_orthonormal(const Basis& b);
Verdict check_unbiased_pair(const Basis& a, const Basis& b);

using FloatVector = std::vector<std::complex<double>>;

struct FloatBasis {
  std::vector<FloatVector> vectors;
};

struct FloatFamily {
  std::size_t dim = 0;
  std::vector<FloatBasis> bases;
  std::string provenance;
};

FloatBasis to_float(const Basis& b);
/// Also asserts every phase component has |z|^2 = 1/N to 1e-12.
FloatFamily to_float(const MubFamily& f);

std::complex<double> inner_product(const FloatVector& v, const FloatVector& w);
Verdict check_orthonormal(const FloatBasis& b, double tol = kDefaultTolerance);
Verdict check_unbiased_pair(const FloatBasis& a, const FloatBasis& b, double tol = kDefaultTolerance);

enum class VerifyMode { kExact, kFloat };

struct VerificationReport {
  std::size_t dim = 0;
  VerifyMode mode = VerifyMode::kExact;
  double tolerance = 0.0;                   // 0 in exact mode
  std::vector<bool> orthonormal;            // per basis
  std::vector<std::vector<bool>> unbiased;  // symmetric; diagonal is true
  std::vector<Witness> witnesses;

  bool all_pass() const;
};

VerificationReport verify_family(const MubFamily& f);
VerificationReport verify_family(const FloatFamily& f, double tol = kDefaultTolerance);

struct MaxSubsetResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // indices into the family, ascending
  std::vector<std::size_t> dropped;  // non-orthonormal bases, excluded
};

/// Exact maximum set of pairwise unbiased bases. Throws ResourceLimit when more
/// than node_limit orthonormal bases remain.
MaxSubsetResult mub_max_subset(const MubFamily& f, std::size_t node_limit = kDefaultCliqueNodeLimit);

/// 1 + min p_i^{e_i} over the factorization of N. Throws InvalidArgument for N < 2.
std::uint64_t mub_bound(std::uint64_t n);

}  // namespace mubkit

#endif  // MUBKIT_VERIFY_HPP_
