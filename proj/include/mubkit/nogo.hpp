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

// Randomized search for large unbiased families among character-of-polynomial
// formula bases over a transversal S of a finite ring.

#ifndef MUBKIT_NOGO_HPP_
#define MUBKIT_NOGO_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mubkit/mub.hpp"
#include "mubkit/ring.hpp"

namespace mubkit {

inline constexpr std::size_t kDefaultSearchNodeLimit = 4096;

struct SearchOptions {
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
  unsigned degree_bound = kDefaultDegreeBound;  // per variable
  bool force_known = true;
  std::size_t node_limit = kDefaultSearchNodeLimit;
};

struct SearchResult {
  std::size_t max_size = 1;       // includes the standard basis
  MubFamily best;                 // standard basis first
  std::size_t dimension = 0;      // |S|
  std::size_t forced = 0;         // known specs placed ahead of the random ones
  std::size_t sampled = 0;        // specs evaluated, forced included
  std::size_t orthonormal = 0;    // candidates that are orthonormal
  std::size_t distinct = 0;       // orthonormal candidates up to vector phases and order
  std::optional<std::uint64_t> bound;  // 1 + min p^e for composite |S|, N + 1 otherwise
};

/// Known trace specs for rings whose origin is GF(p^n) with p odd (S = R), Z_p
/// with p an odd prime (S = R), GR(4,n) or Z_4 (S = Teichmuller set). Empty
/// otherwise or when S does not match.
std::vector<FormulaSpec> known_specs(const FiniteRing& r, const TransversalSet& t);

/// Spec number `index` of the random stream for `seed`: uniform character
/// index and uniform coefficients on every k^a l^b with a, b <= degree_bound.
FormulaSpec random_spec(const FiniteRing& r, const CharacterGroup& chars, std::uint64_t seed, std::uint64_t index,
                        unsigned degree_bound);

/// Budget-many specs: the known ones first (if enabled), then random ones.
/// Keeps orthonormal candidates, dedupes them, and reports one more than the
/// largest clique of pairwise unbiased candidates. Throws PropertyViolation if
/// the result exceeds the bound, ResourceLimit above node_limit distinct candidates.
SearchResult nogo_search(const FiniteRing& r, const TransversalSet& t, const SearchOptions& options);

}  // namespace mubkit

#endif  // MUBKIT_NOGO_HPP_
