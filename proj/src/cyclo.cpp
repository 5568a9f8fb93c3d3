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

#include "mubkit/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "mubkit/errors.hpp"

namespace mubkit {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact quotient of a by a monic b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t lead = a[i];
    q[i - db] = lead;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw PropertyViolation("cyclotomic: x^m - 1 not divisible by the lower factors");
  }
  return q;
}

IntPoly compute_phi(std::uint32_t m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) throw InvalidArgument("cyclotomic: order must be >= 1");
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<const IntPoly>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  // Computed outside the lock: the recursion re-enters for each divisor.
  auto phi = std::make_unique<const IntPoly>(compute_phi(m));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(m, std::move(phi));
  return *it->second;
}

CycloNumber CycloNumber::reduce(std::uint32_t m, std::vector<std::int64_t> poly) {
  const IntPoly& phi = cyclotomic_polynomial(m);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > d;) {
    const std::int64_t lead = poly[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) poly[i - d + j] -= lead * phi[j];
  }
  poly.resize(d, 0);
  return CycloNumber(m, std::move(poly));
}

CycloNumber CycloNumber::integer(std::uint32_t m, std::int64_t k) {
  const std::size_t d = cyclotomic_polynomial(m).size() - 1;
  std::vector<std::int64_t> c(d, 0);
  if (d == 0) return CycloNumber(m, std::move(c));
  c[0] = k;
  return CycloNumber(m, std::move(c));
}

CycloNumber CycloNumber::root(std::uint32_t m, std::uint64_t e) {
  std::vector<std::int64_t> poly(m, 0);
  poly[e % m] = 1;
  return reduce(m, std::move(poly));
}

CycloNumber CycloNumber::from_exponent_counts(std::uint32_t m, const std::vector<std::int64_t>& counts) {
  if (counts.size() != m) throw InvalidArgument("cyclotomic: exponent counts must have length m");
  return reduce(m, counts);
}

void CycloNumber::check_same(const CycloNumber& o) const {
  if (m_ != o.m_) {
    throw InvalidArgument("cyclotomic: order mismatch (" + std::to_string(m_) + " vs " + std::to_string(o.m_) + ")");
  }
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
  check_same(o);
  auto c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return CycloNumber(m_, std::move(c));
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
  check_same(o);
  auto c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return CycloNumber(m_, std::move(c));
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
  check_same(o);
  if (coeffs_.empty()) return *this;
  std::vector<std::int64_t> prod(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return reduce(m_, std::move(prod));
}

CycloNumber CycloNumber::conj() const {
  // zeta^i -> zeta^(m - i)
  std::vector<std::int64_t> poly(m_, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[(m_ - i) % m_] += coeffs_[i];
  return reduce(m_, std::move(poly));
}

bool CycloNumber::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloNumber::equals_integer(std::int64_t k) const { return *this == integer(m_, k); }

std::optional<std::int64_t> CycloNumber::to_integer() const {
  if (coeffs_.empty()) return 0;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

std::string CycloNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << '-';
    first = false;
    const auto a = c < 0 ? -c : c;
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << "z" << m_;
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

CycloNumber norm_squared_from_counts(std::uint32_t m, const std::vector<std::int64_t>& counts) {
  if (counts.size() != m) throw InvalidArgument("cyclotomic: exponent counts must have length m");
  std::vector<std::int64_t> d(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (counts[i] == 0) continue;
    for (std::uint32_t j = 0; j < m; ++j) d[(i + m - j) % m] += counts[i] * counts[j];
  }
  return CycloNumber::from_exponent_counts(m, d);
}

}  // namespace mubkit
