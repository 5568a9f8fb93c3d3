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

#include <complex>
#include <numeric>
#include <numbers>
#include <random>

#include "mubkit/cyclo.hpp"
#include "mubkit/errors.hpp"

namespace mubkit {
namespace {

std::complex<double> evaluate(const CycloNumber& z) {
  const double step = 2.0 * std::numbers::pi / z.order();
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) acc += double(z.coeffs()[i]) * std::polar(1.0, step * double(i));
  return acc;
}

std::complex<double> evaluate_counts(std::uint32_t m, const std::vector<std::int64_t>& counts) {
  std::complex<double> acc = 0.0;
  for (std::size_t e = 0; e < counts.size(); ++e) acc += double(counts[e]) * std::polar(1.0, 2.0 * std::numbers::pi * double(e) / m);
  return acc;
}

std::uint32_t euler_phi(std::uint32_t m) {
  std::uint32_t count = 0;
  for (std::uint32_t k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
  return count;
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  for (std::uint32_t m = 1; m <= 60; ++m) {
    EXPECT_EQ(cyclotomic_polynomial(m).size(), euler_phi(m) + 1) << m;
  }
}

TEST(Cyclotomic, RootsOfPhiAreRoots) {
  for (std::uint32_t m = 1; m <= 40; ++m) {
    const auto& phi = cyclotomic_polynomial(m);
    const auto zeta = std::polar(1.0, 2.0 * std::numbers::pi / m);
    std::complex<double> v = 0.0, power = 1.0;
    for (auto c : phi) {
      v += double(c) * power;
      power *= zeta;
    }
    EXPECT_LT(std::abs(v), 1e-9) << m;
  }
}

TEST(Cyclotomic, IEqualsMinusOne) {
  const auto i = CycloNumber::root(4, 1);
  const auto sq = i * i;
  EXPECT_EQ(sq.coeffs(), (std::vector<std::int64_t>{-1, 0}));
  EXPECT_TRUE(sq.equals_integer(-1));
}

TEST(Cyclotomic, CubeRootsSumToZero) {
  const auto s = CycloNumber::integer(3, 1) + CycloNumber::root(3, 1) + CycloNumber::root(3, 2);
  EXPECT_TRUE(s.is_zero());
}

TEST(Cyclotomic, OneIsNeutral) {
  std::mt19937_64 rng(2);
  for (std::uint32_t m : {1u, 2u, 5u, 12u, 15u}) {
    std::vector<std::int64_t> counts(m);
    for (auto& c : counts) c = std::int64_t(rng() % 7) - 3;
    const auto a = CycloNumber::from_exponent_counts(m, counts);
    EXPECT_EQ(a * CycloNumber::integer(m, 1), a);
  }
}

TEST(Cyclotomic, OrderMismatchRejected) {
  EXPECT_THROW(CycloNumber::root(3, 1) + CycloNumber::root(4, 1), InvalidArgument);
  EXPECT_THROW(CycloNumber::root(3, 1) * CycloNumber::root(6, 1), InvalidArgument);
}

TEST(Cyclotomic, ToInteger) {
  EXPECT_EQ(CycloNumber::integer(7, 5).to_integer(), 5);
  EXPECT_FALSE(CycloNumber::root(7, 1).to_integer().has_value());
  // zeta_6 + zeta_6^5 = 1.
  EXPECT_EQ((CycloNumber::root(6, 1) + CycloNumber::root(6, 5)).to_integer(), 1);
}

// The ring operations agree with complex evaluation, and the canonical form
// makes equality of values equality of coefficient vectors.
TEST(Cyclotomic, AgreesWithComplexEvaluation) {
  std::mt19937_64 rng(9);
  for (std::uint32_t m = 1; m <= 36; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> ca(m), cb(m);
      for (auto& c : ca) c = std::int64_t(rng() % 9) - 4;
      for (auto& c : cb) c = std::int64_t(rng() % 9) - 4;
      const auto a = CycloNumber::from_exponent_counts(m, ca);
      const auto b = CycloNumber::from_exponent_counts(m, cb);
      const auto za = evaluate_counts(m, ca), zb = evaluate_counts(m, cb);
      ASSERT_LT(std::abs(evaluate(a) - za), 1e-8);
      ASSERT_LT(std::abs(evaluate(a + b) - (za + zb)), 1e-8);
      ASSERT_LT(std::abs(evaluate(a - b) - (za - zb)), 1e-8);
      ASSERT_LT(std::abs(evaluate(a * b) - za * zb), 1e-7);
      ASSERT_LT(std::abs(evaluate(a.conj()) - std::conj(za)), 1e-8);
      ASSERT_EQ(norm_squared_from_counts(m, ca), a * a.conj());
      ASSERT_EQ((a - a).is_zero(), true);
      ASSERT_EQ(a.coeffs().size(), euler_phi(m));
    }
  }
}

TEST(Cyclotomic, Printing) {
  EXPECT_EQ(CycloNumber::integer(5, 0).to_string(), "0");
  EXPECT_EQ(CycloNumber::integer(5, -3).to_string(), "-3");
  EXPECT_NE(CycloNumber::root(5, 1).to_string().find("z5"), std::string::npos);
}

}  // namespace
}  // namespace mubkit
