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

// Dense polynomials over Z_q, constant term first. Internal to the library.

#ifndef MUBKIT_SRC_POLY_ZQ_HPP_
#define MUBKIT_SRC_POLY_ZQ_HPP_

#include <cstdint>
#include <vector>

namespace mubkit::detail {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += std::uint64_t{a[i]} * b[j];
  }
  Poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % q);
  trim(out);
  return out;
}

/// Remainder of `a` by a monic `divisor` (leading coefficient 1).
inline Poly poly_rem_monic(Poly a, const Poly& divisor, std::uint32_t q) {
  trim(a);
  const std::size_t d = divisor.size() - 1;
  while (a.size() > d && !a.empty()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) {
      std::uint64_t sub = (std::uint64_t{lead} * divisor[i]) % q;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + q - sub) % q);
    }
    trim(a);
  }
  return a;
}

/// Coefficients of `index` in base q, least significant first, padded to `len`.
inline Poly digits(std::uint64_t index, std::uint32_t q, std::size_t len) {
  Poly out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return out;
}

inline std::uint64_t undigits(const Poly& coeffs, std::uint32_t q) {
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * q + coeffs[i];
  return v;
}

}  // namespace mubkit::detail

#endif  // MUBKIT_SRC_POLY_ZQ_HPP_
