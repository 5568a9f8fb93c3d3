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

#ifndef MUBKIT_NUMTHEORY_HPP_
#define MUBKIT_NUMTHEORY_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mubkit {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  std::uint64_t value() const;
  bool operator==(const PrimePower&) const = default;
};

bool is_prime(std::uint64_t n);

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// base^exp, or nullopt once the result would exceed `limit`.
std::optional<std::uint64_t> bounded_pow(std::uint64_t base, unsigned exp, std::uint64_t limit);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Inverse of a modulo m for gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// "2^2 * 3" style rendering of a factorization.
std::string format_factorization(const std::vector<PrimePower>& factors);

// Size bounds. The ring-table bound honours MUBKIT_MAX_ORDER.
inline constexpr std::uint64_t kDefaultFieldLimit = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultRingOrderLimit = 256;
inline constexpr std::uint64_t kDefaultCharacterEnumerationLimit = 4096;
inline constexpr std::size_t kDefaultCliqueNodeLimit = 64;

std::uint64_t ring_order_limit();

/// Uniform draw from [0, n) by rejection; identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace mubkit

#endif  // MUBKIT_NUMTHEORY_HPP_
