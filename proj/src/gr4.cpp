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

#include "mubkit/gr4.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "mubkit/errors.hpp"
#include "mubkit/gf.hpp"
#include "poly_zq.hpp"

namespace mubkit {

using detail::Poly;

namespace {

// h(x^2) = (-1)^n f(x) f(-x) mod 4.
Poly graeffe_lift(const Poly& f) {
  const std::size_t n = f.size() - 1;
  Poly f_neg(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) f_neg[i] = (i % 2 == 0) ? f[i] : (4 - f[i]) % 4;
  Poly prod = detail::poly_mul(f, f_neg, 4);
  prod.resize(2 * n + 1, 0);
  Poly h(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (2 * j + 1 < prod.size() && prod[2 * j + 1] != 0) throw PropertyViolation("gr4: Graeffe product has an odd-degree term");
    h[j] = prod[2 * j];
  }
  if (n % 2 == 1) {
    for (auto& c : h) c = (4 - c) % 4;
  }
  if (h.back() != 1) throw PropertyViolation("gr4: Graeffe lift is not monic");
  for (std::size_t i = 0; i <= n; ++i) {
    if (h[i] % 2 != f[i]) throw PropertyViolation("gr4: Graeffe lift does not reduce to f mod 2");
  }
  return h;
}

}  // namespace

Gr4Ring Gr4Ring::make(unsigned n, std::uint64_t max_elements) {
  if (n == 0) throw InvalidArgument("gr4: degree must be >= 1");
  auto size = bounded_pow(4, n, max_elements);
  if (!size) {
    throw ResourceLimit("gr4: GR(4," + std::to_string(n) + ") exceeds the size bound of " + std::to_string(max_elements) +
                        " elements");
  }
  Gr4Ring r;
  r.n_ = n;
  r.size_ = *size;
  r.modulus_ = graeffe_lift(GfField::make(2, n).modulus());

  const std::uint64_t q = std::uint64_t{1} << n;
  for (std::uint64_t idx = 0; idx < r.size_; ++idx) {
    Gr4Element x = r.element(idx);
    if (r.pow(x, q) == x) r.teich_.push_back(std::move(x));
  }
  // Ascending index already puts 0 then 1 first.
  if (r.teich_.size() != q) throw PropertyViolation("gr4: Teichmuller set has the wrong size");

  r.teich_by_residue_.assign(q, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < r.teich_.size(); ++i) {
    auto slot = r.residue_index(r.teich_[i]);
    if (r.teich_by_residue_[slot] != std::numeric_limits<std::size_t>::max()) {
      throw PropertyViolation("gr4: two Teichmuller elements share a residue class");
    }
    r.teich_by_residue_[slot] = i;
  }
  return r;
}

void Gr4Ring::check(const Gr4Element& a) const {
  if (!contains(a)) throw InvalidArgument("gr4: element does not belong to GR(4," + std::to_string(n_) + ")");
}

bool Gr4Ring::contains(const Gr4Element& a) const {
  if (a.coeffs.size() != n_) return false;
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](auto c) { return c < 4; });
}

Gr4Element Gr4Ring::zero() const { return Gr4Element{std::vector<std::uint32_t>(n_, 0)}; }

Gr4Element Gr4Ring::one() const {
  Gr4Element e = zero();
  e.coeffs[0] = 1;
  return e;
}

Gr4Element Gr4Ring::element(std::uint64_t index) const {
  if (index >= size_) throw InvalidArgument("gr4: element index out of range");
  return Gr4Element{detail::digits(index, 4, n_)};
}

std::uint64_t Gr4Ring::index_of(const Gr4Element& a) const {
  check(a);
  return detail::undigits(a.coeffs, 4);
}

std::uint64_t Gr4Ring::residue_index(const Gr4Element& a) const {
  std::uint64_t v = 0;
  for (std::size_t i = n_; i-- > 0;) v = v * 2 + (a.coeffs[i] & 1u);
  return v;
}

Gr4Element Gr4Ring::add(const Gr4Element& a, const Gr4Element& b) const {
  check(a);
  check(b);
  Gr4Element out = zero();
  for (unsigned i = 0; i < n_; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) & 3u;
  return out;
}

Gr4Element Gr4Ring::neg(const Gr4Element& a) const {
  check(a);
  Gr4Element out = zero();
  for (unsigned i = 0; i < n_; ++i) out.coeffs[i] = (4 - a.coeffs[i]) & 3u;
  return out;
}

Gr4Element Gr4Ring::sub(const Gr4Element& a, const Gr4Element& b) const { return add(a, neg(b)); }

Gr4Element Gr4Ring::scale(std::uint32_t k, const Gr4Element& a) const {
  check(a);
  Gr4Element out = zero();
  for (unsigned i = 0; i < n_; ++i) out.coeffs[i] = (k * a.coeffs[i]) & 3u;
  return out;
}

Gr4Element Gr4Ring::mul(const Gr4Element& a, const Gr4Element& b) const {
  check(a);
  check(b);
  Poly prod = detail::poly_rem_monic(detail::poly_mul(a.coeffs, b.coeffs, 4), modulus_, 4);
  prod.resize(n_, 0);
  return Gr4Element{std::move(prod)};
}

Gr4Element Gr4Ring::pow(const Gr4Element& a, std::uint64_t e) const {
  Gr4Element result = one();
  Gr4Element base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

bool Gr4Ring::is_teichmuller(const Gr4Element& a) const {
  check(a);
  return teich_[teich_by_residue_[residue_index(a)]] == a;
}

TeichSplit Gr4Ring::split(const Gr4Element& r) const {
  check(r);
  const Gr4Element& t0 = teich_[teich_by_residue_[residue_index(r)]];
  Gr4Element diff = sub(r, t0);
  Gr4Element half = zero();
  for (unsigned i = 0; i < n_; ++i) {
    if (diff.coeffs[i] % 2 != 0) throw PropertyViolation("gr4: r - t0 is not divisible by 2");
    half.coeffs[i] = diff.coeffs[i] / 2;
  }
  const Gr4Element& t1 = teich_[teich_by_residue_[residue_index(half)]];
  if (add(t0, scale(2, t1)) != r) throw PropertyViolation("gr4: 2-adic split does not reproduce r");
  return {t0, t1};
}

Gr4Element Gr4Ring::frobenius(const Gr4Element& r) const {
  auto [t0, t1] = split(r);
  return add(mul(t0, t0), scale(2, mul(t1, t1)));
}

std::uint32_t Gr4Ring::trace(const Gr4Element& r) const {
  Gr4Element sum = zero();
  Gr4Element term = r;
  for (unsigned i = 0; i < n_; ++i) {
    sum = add(sum, term);
    term = frobenius(term);
  }
  for (unsigned i = 1; i < n_; ++i) {
    if (sum.coeffs[i] != 0) throw PropertyViolation("gr4: trace left Z_4");
  }
  return sum.coeffs[0];
}

std::string Gr4Ring::to_string(const Gr4Element& a) const {
  check(a);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = n_; i-- > 0;) {
    const auto c = a.coeffs[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << 'y';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace mubkit
