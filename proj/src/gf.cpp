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

#include "mubkit/gf.hpp"

#include <sstream>

#include "mubkit/errors.hpp"
#include "poly_zq.hpp"

namespace mubkit {

using detail::Poly;

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  if (monic.size() < 2 || monic.back() != 1) throw InvalidArgument("is_irreducible_mod_p: polynomial must be monic of degree >= 1");
  const std::size_t n = monic.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = *bounded_pow(p, static_cast<unsigned>(d), UINT64_MAX);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor = detail::digits(idx, p, d);
      divisor.push_back(1);
      if (detail::poly_rem_monic(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

GfField GfField::make(std::uint32_t p, unsigned n, std::uint64_t max_elements) {
  if (!is_prime(p)) throw InvalidArgument("gf: characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw InvalidArgument("gf: extension degree must be >= 1");
  auto size = bounded_pow(p, n, max_elements);
  if (!size) {
    throw ResourceLimit("gf: field GF(" + std::to_string(p) + "^" + std::to_string(n) + ") exceeds the size bound of " +
                        std::to_string(max_elements) + " elements");
  }

  GfField f;
  f.p_ = p;
  f.n_ = n;
  f.size_ = *size;
  for (std::uint64_t idx = 0; idx < f.size_; ++idx) {
    Poly candidate = detail::digits(idx, p, n);
    candidate.push_back(1);
    if (is_irreducible_mod_p(candidate, p)) {
      f.modulus_ = std::move(candidate);
      break;
    }
  }
  if (f.modulus_.empty()) throw PropertyViolation("gf: no irreducible polynomial found");

  f.basis_trace_.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    GfElement xi = f.zero();
    xi.coeffs[i] = 1;
    f.basis_trace_[i] = f.trace_by_frobenius(xi);
  }
  return f;
}

void GfField::check(const GfElement& a) const {
  if (!contains(a)) throw InvalidArgument("gf: element does not belong to GF(" + std::to_string(p_) + "^" + std::to_string(n_) + ")");
}

bool GfField::contains(const GfElement& a) const {
  if (a.coeffs.size() != n_) return false;
  for (auto c : a.coeffs) {
    if (c >= p_) return false;
  }
  return true;
}

GfElement GfField::zero() const { return GfElement{std::vector<std::uint32_t>(n_, 0)}; }

GfElement GfField::one() const {
  GfElement e = zero();
  e.coeffs[0] = 1;
  // For n = 1 the modulus is x and 1 is already reduced.
  return e;
}

GfElement GfField::element(std::uint64_t index) const {
  if (index >= size_) throw InvalidArgument("gf: element index out of range");
  return GfElement{detail::digits(index, p_, n_)};
}

std::uint64_t GfField::index_of(const GfElement& a) const {
  check(a);
  return detail::undigits(a.coeffs, p_);
}

GfElement GfField::add(const GfElement& a, const GfElement& b) const {
  check(a);
  check(b);
  GfElement out = zero();
  for (unsigned i = 0; i < n_; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return out;
}

GfElement GfField::neg(const GfElement& a) const {
  check(a);
  GfElement out = zero();
  for (unsigned i = 0; i < n_; ++i) out.coeffs[i] = (p_ - a.coeffs[i]) % p_;
  return out;
}

GfElement GfField::sub(const GfElement& a, const GfElement& b) const { return add(a, neg(b)); }

GfElement GfField::mul(const GfElement& a, const GfElement& b) const {
  check(a);
  check(b);
  Poly prod = detail::poly_rem_monic(detail::poly_mul(a.coeffs, b.coeffs, p_), modulus_, p_);
  prod.resize(n_, 0);
  return GfElement{std::move(prod)};
}

GfElement GfField::pow(const GfElement& a, std::uint64_t e) const {
  GfElement result = one();
  GfElement base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

GfElement GfField::inverse(const GfElement& a) const {
  if (a == zero()) throw InvalidArgument("gf: zero has no inverse");
  return pow(a, size_ - 2);
}

std::uint32_t GfField::trace_by_frobenius(const GfElement& a) const {
  GfElement sum = zero();
  GfElement term = a;
  for (unsigned i = 0; i < n_; ++i) {
    sum = add(sum, term);
    term = frobenius(term);
  }
  for (unsigned i = 1; i < n_; ++i) {
    if (sum.coeffs[i] != 0) throw PropertyViolation("gf: trace left the prime field");
  }
  return sum.coeffs[0];
}

std::uint32_t GfField::trace(const GfElement& a) const {
  check(a);
  std::uint64_t t = 0;
  for (unsigned i = 0; i < n_; ++i) t += std::uint64_t{a.coeffs[i]} * basis_trace_[i];
  return static_cast<std::uint32_t>(t % p_);
}

std::string GfField::to_string(const GfElement& a) const {
  check(a);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = n_; i-- > 0;) {
    const auto c = a.coeffs[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace mubkit
