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

#include <algorithm>
#include <array>
#include <complex>
#include <functional>
#include <numbers>
#include <set>

#include "mubkit/gf.hpp"
#include "mubkit/gr4.hpp"
#include "mubkit/nogo.hpp"
#include "mubkit/verify.hpp"

namespace mubkit {
namespace {

ElementSet all(const FiniteRing& r) {
  ElementSet s(r.order());
  for (ElementId x = 0; x < r.order(); ++x) s[x] = x;
  return s;
}

SearchOptions opts(std::uint64_t budget, std::uint64_t seed = 0) {
  SearchOptions o;
  o.budget = budget;
  o.seed = seed;
  return o;
}

TEST(NogoSearch, ZeroBudgetIsStandardOnly) {
  const auto r = ring_from_zn(6);
  const auto res = nogo_search(r, transversal_check(r, all(r), {0}), opts(0));
  EXPECT_EQ(res.max_size, 1u);
  ASSERT_EQ(res.best.size(), 1u);
  EXPECT_TRUE(res.best[0].is_standard());
  EXPECT_EQ(res.sampled, 0u);
}

TEST(NogoSearch, PrimeFieldReachesCompleteSet) {
  const auto r = ring_from_zn(3);
  const auto t = transversal_check(r, all(r), {0});
  EXPECT_EQ(known_specs(r, t).size(), 3u);
  const auto res = nogo_search(r, t, opts(3));
  EXPECT_EQ(res.max_size, 4u);
  EXPECT_EQ(res.forced, 3u);
  EXPECT_TRUE(verify_family(res.best).all_pass());
}

TEST(NogoSearch, Z6NeverExceedsBound) {
  const auto r = ring_from_zn(6);
  const auto t = transversal_check(r, all(r), {0});
  const auto res = nogo_search(r, t, opts(10000, 7));
  EXPECT_LE(res.max_size, 3u);
  EXPECT_EQ(res.bound, 3u);
  EXPECT_TRUE(known_specs(r, t).empty());
  EXPECT_TRUE(verify_family(res.best).all_pass());
  EXPECT_EQ(res.best.size(), res.max_size);
}

TEST(NogoSearch, DeterministicPerSeed) {
  const auto r = ring_from_zn(12);
  const auto t = teichmuller_transversal(r);
  const auto a = nogo_search(r, t, opts(500, 3));
  const auto b = nogo_search(r, t, opts(500, 3));
  EXPECT_EQ(a.max_size, b.max_size);
  EXPECT_EQ(a.orthonormal, b.orthonormal);
  EXPECT_EQ(a.distinct, b.distinct);
  const CharacterGroup chars(r);
  const auto s1 = random_spec(r, chars, 9, 41, 3);
  const auto s2 = random_spec(r, chars, 9, 41, 3);
  EXPECT_EQ(s1.character, s2.character);
  EXPECT_EQ(s1.terms, s2.terms);
  EXPECT_EQ(s1.constant, s2.constant);
  for (const auto& m : s1.terms) {
    EXPECT_LE(m.k_degree, 3u);
    EXPECT_LE(m.l_degree, 3u);
    EXPECT_NE(m.coeff, r.zero());
  }
}

TEST(NogoSearch, KnownSpecsMatchRing) {
  const auto z4 = ring_from_zn(4);
  EXPECT_EQ(known_specs(z4, teichmuller_transversal(z4)).size(), 2u);
  EXPECT_TRUE(known_specs(z4, transversal_check(z4, all(z4), {0})).empty());
  const auto g = ring_from_catalog("gr4:2");
  EXPECT_EQ(known_specs(g, teichmuller_transversal(g)).size(), 4u);
  const auto f9 = ring_from_catalog("gf:3,2");
  EXPECT_EQ(known_specs(f9, transversal_check(f9, all(f9), {0})).size(), 9u);
  const auto f4 = ring_from_catalog("gf:2,2");
  EXPECT_TRUE(known_specs(f4, transversal_check(f4, all(f4), {0})).empty());
}

TEST(NogoSearch, GaloisRingsReachCompleteSets) {
  const auto z4 = ring_from_zn(4);
  EXPECT_EQ(nogo_search(z4, teichmuller_transversal(z4), opts(100)).max_size, 3u);
  const auto g = ring_from_catalog("gr4:2");
  EXPECT_EQ(nogo_search(g, teichmuller_transversal(g), opts(100)).max_size, 5u);
  const auto f9 = ring_from_catalog("gf:3,2");
  EXPECT_EQ(nogo_search(f9, transversal_check(f9, all(f9), {0}), opts(100)).max_size, 10u);
}

TEST(NogoSearch, ForcingCanBeDisabled) {
  const auto r = ring_from_zn(5);
  auto o = opts(5);
  o.force_known = false;
  const auto res = nogo_search(r, transversal_check(r, all(r), {0}), o);
  EXPECT_EQ(res.forced, 0u);
  EXPECT_EQ(res.sampled, 5u);
}

// Independent oracle for S = Z_4. Every character of Z_4 is x -> a x, and
// a * P is again a polynomial of the same shape, so the candidate bases are
// exactly the functions k, l -> P(k, l) in the Z_4-span of the monomials
// k^a l^b (a, b <= 3), read as exponents of i.
using Fn = std::array<std::uint8_t, 16>;  // f(k, l) at 4k + l

std::set<Fn> z4_polynomial_functions() {
  std::set<Fn> span{Fn{}};
  for (unsigned a = 0; a <= 3; ++a) {
    for (unsigned b = 0; b <= 3; ++b) {
      Fn g{};
      for (unsigned k = 0; k < 4; ++k) {
        for (unsigned l = 0; l < 4; ++l) {
          unsigned v = 1;
          for (unsigned i = 0; i < a; ++i) v = v * k % 4;
          for (unsigned i = 0; i < b; ++i) v = v * l % 4;
          g[4 * k + l] = static_cast<std::uint8_t>(v);
        }
      }
      std::set<Fn> next;
      for (const auto& f : span) {
        for (unsigned c = 0; c < 4; ++c) {
          Fn h = f;
          for (int i = 0; i < 16; ++i) h[i] = static_cast<std::uint8_t>((h[i] + c * g[i]) % 4);
          next.insert(h);
        }
      }
      span = std::move(next);
    }
  }
  return span;
}

std::complex<double> row_overlap(const Fn& f, unsigned k, const Fn& g, unsigned j) {
  std::complex<double> acc = 0.0;
  for (unsigned l = 0; l < 4; ++l) acc += std::polar(0.25, std::numbers::pi / 2 * (int(g[4 * j + l]) - int(f[4 * k + l])));
  return acc;
}

std::size_t z4_exhaustive_maximum() {
  std::set<std::vector<std::array<std::uint8_t, 4>>> canon;
  std::vector<Fn> bases;
  for (const auto& f : z4_polynomial_functions()) {
    bool ortho = true;
    for (unsigned k = 0; k < 4 && ortho; ++k) {
      for (unsigned j = k + 1; j < 4 && ortho; ++j) ortho = std::abs(row_overlap(f, k, f, j)) < 1e-9;
    }
    if (!ortho) continue;
    std::vector<std::array<std::uint8_t, 4>> rows;
    for (unsigned k = 0; k < 4; ++k) {
      std::array<std::uint8_t, 4> row{};
      for (unsigned l = 0; l < 4; ++l) row[l] = static_cast<std::uint8_t>((f[4 * k + l] + 4 - f[4 * k]) % 4);
      rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());
    if (canon.insert(rows).second) bases.push_back(f);
  }
  const std::size_t n = bases.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool ok = true;
      for (unsigned k = 0; k < 4 && ok; ++k) {
        for (unsigned j = 0; j < 4 && ok; ++j) ok = std::abs(std::norm(row_overlap(bases[x], k, bases[y], j)) - 0.25) < 1e-9;
      }
      adj[x][y] = adj[y][x] = ok;
    }
  }
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    best = std::max(best, chosen.size());
    for (std::size_t v = from; v < n; ++v) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return adj[u][v]; })) {
        chosen.push_back(v);
        grow(v + 1);
        chosen.pop_back();
      }
    }
  };
  grow(0);
  return best + 1;  // plus the standard basis
}

TEST(NogoOracle, Z4FullIndexSetExhaustive) {
  RecordProperty("polynomial_functions", static_cast<int>(z4_polynomial_functions().size()));
  const std::size_t oracle = z4_exhaustive_maximum();
  EXPECT_LT(oracle, 5u);
  const auto r = ring_from_zn(4);
  const auto res = nogo_search(r, transversal_check(r, all(r), {0}), opts(10000, 1));
  EXPECT_EQ(res.max_size, oracle);
}

}  // namespace
}  // namespace mubkit
