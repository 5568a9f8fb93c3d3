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

#include "mubkit/nogo.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>

#include "mubkit/clique.hpp"
#include "mubkit/errors.hpp"
#include "mubkit/gf.hpp"
#include "mubkit/gr4.hpp"
#include "mubkit/verify.hpp"

namespace mubkit {

namespace {

ElementSet all_elements(const FiniteRing& r) {
  ElementSet s(r.order());
  for (ElementId x = 0; x < r.order(); ++x) s[x] = x;
  return s;
}

ElementSet teichmuller_indices(const Gr4Ring& g) {
  ElementSet s;
  for (const auto& t : g.teichmuller()) s.push_back(static_cast<ElementId>(g.index_of(t)));
  std::sort(s.begin(), s.end());
  return s;
}

// Rows shifted so that component 0 has exponent 0, then sorted: equal keys
// mean the same set of vectors up to global phases.
using Key = std::vector<std::vector<std::uint32_t>>;

Key canonical_key(const Basis& b) {
  Key rows = b.exponents();
  const std::uint32_t m = b.root_order();
  for (auto& row : rows) {
    const std::uint32_t shift = row[0];
    for (auto& e : row) e = (e + m - shift) % m;
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Unscaled complex rows, for a screen ahead of the exact test.
std::vector<std::vector<std::complex<double>>> complex_rows(const Basis& b) {
  const double step = 2.0 * std::numbers::pi / b.root_order();
  std::vector<std::vector<std::complex<double>>> out(b.dim(), std::vector<std::complex<double>>(b.dim()));
  for (std::size_t k = 0; k < b.dim(); ++k) {
    for (std::size_t l = 0; l < b.dim(); ++l) out[k][l] = std::polar(1.0, step * b.exponents()[k][l]);
  }
  return out;
}

// The screen only rejects when |S|^2 is off from N by more than 1e-6; rounding
// error on sums of at most 256 unit terms is below 1e-10, so every pair it
// rejects also fails the exact test.
bool screen_unbiased(const std::vector<std::vector<std::complex<double>>>& a,
                     const std::vector<std::vector<std::complex<double>>>& b) {
  const double n = static_cast<double>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::complex<double> s = 0.0;
      for (std::size_t l = 0; l < a.size(); ++l) s += std::conj(a[i][l]) * b[j][l];
      if (std::abs(std::norm(s) - n) > 1e-6) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<FormulaSpec> known_specs(const FiniteRing& r, const TransversalSet& t) {
  const auto& origin = r.origin();
  const ElementSet& s = t.elements();
  switch (origin.kind) {
    case RingOrigin::Kind::kGaloisField:
      if (origin.a % 2 == 1 && s == all_elements(r)) return quadratic_trace_specs(GfField::make(origin.a, origin.b));
      break;
    case RingOrigin::Kind::kIntegersMod:
      if (origin.a % 2 == 1 && is_prime(origin.a) && s == all_elements(r)) {
        return quadratic_trace_specs(GfField::make(origin.a, 1));
      }
      if (origin.a == 4) {
        const Gr4Ring g = Gr4Ring::make(1);
        if (s == teichmuller_indices(g)) return galois_ring_trace_specs(g);
      }
      break;
    case RingOrigin::Kind::kGaloisRing4: {
      const Gr4Ring g = Gr4Ring::make(origin.b);
      if (s == teichmuller_indices(g)) return galois_ring_trace_specs(g);
      break;
    }
    default:
      break;
  }
  return {};
}

FormulaSpec random_spec(const FiniteRing& r, const CharacterGroup& chars, std::uint64_t seed, std::uint64_t index,
                        unsigned degree_bound) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  FormulaSpec spec;
  spec.character = chars.character(uniform_below(rng, chars.size()));
  for (unsigned a = 0; a <= degree_bound; ++a) {
    for (unsigned b = 0; b <= degree_bound; ++b) {
      const auto c = static_cast<ElementId>(uniform_below(rng, r.order()));
      if (a == 0 && b == 0) {
        spec.constant = c;
      } else if (c != r.zero()) {
        spec.terms.push_back({c, a, b});
      }
    }
  }
  spec.label = "sample " + std::to_string(index);
  return spec;
}

SearchResult nogo_search(const FiniteRing& r, const TransversalSet& t, const SearchOptions& options) {
  const ElementSet& s = t.elements();
  const std::size_t n = s.size();
  SearchResult out;
  out.dimension = n;
  out.best = MubFamily::make(n, {Basis::standard(n)}, "search " + r.name());
  if (n >= 2) out.bound = mub_bound(n);
  if (options.budget == 0) return out;

  std::vector<FormulaSpec> forced;
  if (options.force_known) forced = known_specs(r, t);
  if (forced.size() > options.budget) forced.resize(options.budget);
  out.forced = forced.size();
  const CharacterGroup chars(r);

  std::map<Key, std::size_t> seen;
  std::vector<Basis> candidates;
  for (std::uint64_t i = 0; i < options.budget; ++i) {
    const FormulaSpec spec =
        i < forced.size() ? forced[i] : random_spec(r, chars, options.seed, i, options.degree_bound);
    Basis b = formula_basis(r, s, spec);
    ++out.sampled;
    if (!check_orthonormal(b).pass) continue;
    ++out.orthonormal;
    if (seen.emplace(canonical_key(b), candidates.size()).second) candidates.push_back(std::move(b));
  }
  out.distinct = candidates.size();
  if (candidates.size() > options.node_limit) {
    throw ResourceLimit("search: " + std::to_string(candidates.size()) + " distinct candidates exceed the clique bound " +
                        std::to_string(options.node_limit));
  }

  std::vector<std::vector<std::vector<std::complex<double>>>> numeric;
  numeric.reserve(candidates.size());
  for (const auto& b : candidates) numeric.push_back(complex_rows(b));
  Graph g(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (screen_unbiased(numeric[i], numeric[j]) && check_unbiased_pair(candidates[i], candidates[j]).pass) {
        g.add_edge(i, j);
      }
    }
  }
  std::vector<Basis> best{Basis::standard(n)};
  for (auto v : max_clique(g)) best.push_back(candidates[v]);
  out.max_size = best.size();
  out.best = MubFamily::make(n, std::move(best), "search " + r.name() + " seed " + std::to_string(options.seed));

  if (out.max_size > n + 1) throw PropertyViolation("search: more than N+1 mutually unbiased bases");
  if (out.bound && out.max_size > *out.bound) {
    throw PropertyViolation("search: found " + std::to_string(out.max_size) + " mutually unbiased bases, above the bound " +
                            std::to_string(*out.bound) + " for N = " + std::to_string(n));
  }
  return out;
}

}  // namespace mubkit
