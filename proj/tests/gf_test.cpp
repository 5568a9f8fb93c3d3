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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mubkit/errors.hpp"
#include "mubkit/gf.hpp"

namespace mubkit {
namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

Poly poly_mod(Poly a, const Poly& monic, std::uint32_t p) {
  const std::size_t n = monic.size() - 1;
  for (std::size_t d = a.size(); d-- > n;) {
    const std::uint32_t lead = a[d];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) a[d - n + i] = (a[d - n + i] + (p - lead) * monic[i]) % p;
  }
  a.resize(n, 0);
  return a;
}

Poly monic_from_code(std::uint64_t code, std::uint32_t p, unsigned deg) {
  Poly f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i, code /= p) f[i] = static_cast<std::uint32_t>(code % p);
  f[deg] = 1;
  return f;
}

std::uint64_t code_of(const Poly& monic, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = monic.size() - 1; i-- > 0;) code = code * p + monic[i];
  return code;
}

// Smallest code of a monic irreducible of degree n: everything not a product
// of two monic factors of positive degree.
Poly first_irreducible_by_products(std::uint32_t p, unsigned n) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  std::set<std::uint64_t> reducible;
  for (unsigned d = 1; d <= n / 2; ++d) {
    std::uint64_t cd = 1, ce = 1;
    for (unsigned i = 0; i < d; ++i) cd *= p;
    for (unsigned i = 0; i < n - d; ++i) ce *= p;
    for (std::uint64_t a = 0; a < cd; ++a) {
      for (std::uint64_t b = 0; b < ce; ++b) {
        reducible.insert(code_of(poly_mul(monic_from_code(a, p, d), monic_from_code(b, p, n - d), p), p));
      }
    }
  }
  for (std::uint64_t c = 0; c < count; ++c) {
    if (!reducible.count(c)) return monic_from_code(c, p, n);
  }
  return {};
}

GfElement el(const GfField& f, std::uint64_t i) { return f.element(i); }

TEST(GfField, PrimeFieldHasModulusX) {
  const auto f = GfField::make(3, 1);
  EXPECT_EQ(f.modulus(), (Poly{0, 1}));
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.index_of(f.mul(el(f, 2), el(f, 2))), 1u);
}

TEST(GfField, QuadraticModuli) {
  EXPECT_EQ(GfField::make(2, 2).modulus(), (Poly{1, 1, 1}));
  EXPECT_EQ(GfField::make(3, 2).modulus(), (Poly{1, 0, 1}));
}

TEST(GfField, ModulusIsFirstIrreducibleByEncoding) {
  const std::vector<std::pair<std::uint32_t, unsigned>> cases{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                              {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}};
  for (auto [p, n] : cases) {
    if (n == 1) continue;
    EXPECT_EQ(GfField::make(p, n).modulus(), first_irreducible_by_products(p, n)) << p << "^" << n;
  }
}

TEST(GfField, RejectsBadParameters) {
  EXPECT_THROW(GfField::make(4, 1), InvalidArgument);
  EXPECT_THROW(GfField::make(1, 1), InvalidArgument);
  EXPECT_THROW(GfField::make(3, 0), InvalidArgument);
  EXPECT_THROW(GfField::make(2, 21), ResourceLimit);
  EXPECT_THROW(GfField::make(3, 3, 26), ResourceLimit);
}

TEST(GfField, MultiplicationExamples) {
  const auto gf4 = GfField::make(2, 2);
  const GfElement x = el(gf4, 2);
  EXPECT_EQ(gf4.mul(x, x), (GfElement{{1, 1}}));
  const auto gf9 = GfField::make(3, 2);
  const GfElement y = el(gf9, 3);
  EXPECT_EQ(gf9.mul(y, y), (GfElement{{2, 0}}));
  for (std::uint64_t i = 0; i < gf9.size(); ++i) EXPECT_EQ(gf9.mul(el(gf9, i), gf9.one()), el(gf9, i));
}

TEST(GfField, TraceExamples) {
  const auto gf4 = GfField::make(2, 2);
  EXPECT_EQ(gf4.trace(el(gf4, 2)), 1u);
  EXPECT_EQ(gf4.trace(gf4.zero()), 0u);
  const auto gf9 = GfField::make(3, 2);
  EXPECT_EQ(gf9.trace(el(gf9, 3)), 0u);
  EXPECT_EQ(gf9.trace(gf9.one()), 2u);
}

TEST(GfField, ForeignElementsRejected) {
  const auto f = GfField::make(3, 2);
  EXPECT_THROW(f.mul(GfElement{{1, 0, 0}}, f.one()), InvalidArgument);
  EXPECT_THROW(f.add(GfElement{{3, 0}}, f.one()), InvalidArgument);
  EXPECT_THROW(f.inverse(f.zero()), InvalidArgument);
  EXPECT_THROW(f.element(9), InvalidArgument);
}

// Every field with at most 256 elements: the table arithmetic agrees with
// schoolbook polynomial arithmetic, and every nonzero element inverts.
TEST(GfField, ExhaustiveArithmeticUpTo256) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (unsigned n = 1;; ++n) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < n; ++i) q *= p;
      if (q > 256) break;
      const auto f = GfField::make(p, n);
      for (std::uint64_t i = 0; i < q; ++i) {
        const GfElement a = el(f, i);
        for (std::uint64_t j = 0; j < q; ++j) {
          const GfElement b = el(f, j);
          Poly sum(n);
          for (unsigned k = 0; k < n; ++k) sum[k] = (a.coeffs[k] + b.coeffs[k]) % p;
          ASSERT_EQ(f.add(a, b).coeffs, sum);
          ASSERT_EQ(f.mul(a, b).coeffs, poly_mod(poly_mul(a.coeffs, b.coeffs, p), f.modulus(), p));
        }
        if (i != 0) ASSERT_EQ(f.mul(a, f.inverse(a)), f.one());
        ASSERT_EQ(f.add(a, f.neg(a)), f.zero());
        ASSERT_EQ(f.index_of(a), i);
      }
    }
  }
}

// Trace properties for every p^n <= 4096.
TEST(GfField, TraceSuiteUpTo4096) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p = 2; p <= 4096; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned n = 1; q <= 4096; ++n, q *= p) {
      const auto f = GfField::make(p, n);
      std::vector<bool> hit(p, false);
      for (std::uint64_t i = 0; i < q; ++i) {
        const GfElement a = el(f, i);
        const std::uint32_t t = f.trace(a);
        ASSERT_LT(t, p);
        ASSERT_EQ(t, f.trace_by_frobenius(a)) << p << "^" << n << " element " << i;
        ASSERT_EQ(f.trace(f.frobenius(a)), t);
        hit[t] = true;
      }
      for (std::uint32_t v = 0; v < p; ++v) ASSERT_TRUE(hit[v]) << p << "^" << n << " misses " << v;
      for (int s = 0; s < 200; ++s) {
        const GfElement a = el(f, rng() % q);
        const GfElement b = el(f, rng() % q);
        const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
        GfElement ca = f.zero();
        for (std::uint32_t k = 0; k < c; ++k) ca = f.add(ca, a);
        ASSERT_EQ(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % p);
        ASSERT_EQ(f.trace(ca), static_cast<std::uint32_t>((std::uint64_t{c} * f.trace(a)) % p));
      }
    }
  }
}

TEST(GfField, FrobeniusIsAutomorphismOfOrderN) {
  const auto f = GfField::make(3, 3);
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    GfElement a = el(f, i);
    const GfElement start = a;
    for (unsigned k = 0; k < f.degree(); ++k) a = f.frobenius(a);
    EXPECT_EQ(a, start);
    for (std::uint64_t j = 0; j < f.size(); j += 5) {
      const GfElement b = el(f, j);
      EXPECT_EQ(f.frobenius(f.mul(start, b)), f.mul(f.frobenius(start), f.frobenius(b)));
    }
  }
}

TEST(GfField, IrreducibilityPredicate) {
  EXPECT_TRUE(is_irreducible_mod_p({1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible_mod_p({1, 0, 1}, 3));
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 0, 1}, 2));
}

}  // namespace
}  // namespace mubkit
