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

#include "mubkit/mub.hpp"

#include <algorithm>
#include <numeric>

#include "mubkit/errors.hpp"
#include "mubkit/gf.hpp"
#include "mubkit/gr4.hpp"

namespace mubkit {

// ---------------------------------------------------------------------------
// Basis / MubFamily

Basis Basis::standard(std::size_t dim, std::string label) {
  if (dim == 0) throw InvalidArgument("basis: dimension must be >= 1");
  Basis b;
  b.kind_ = Kind::kStandard;
  b.dim_ = dim;
  b.label_ = std::move(label);
  return b;
}

Basis Basis::phase(std::uint32_t root_order, std::vector<std::vector<std::uint32_t>> rows, std::string label) {
  if (root_order == 0) throw InvalidArgument("basis: root order must be >= 1");
  if (rows.empty()) throw InvalidArgument("basis: no vectors");
  const std::size_t n = rows.size();
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidArgument("basis: expected " + std::to_string(n) + " components per vector");
    for (auto e : row) {
      if (e >= root_order) throw InvalidArgument("basis: exponent " + std::to_string(e) + " out of range for root order " + std::to_string(root_order));
    }
  }
  Basis b;
  b.kind_ = Kind::kPhase;
  b.dim_ = n;
  b.root_order_ = root_order;
  b.rows_ = std::move(rows);
  b.label_ = std::move(label);
  return b;
}

Basis Basis::lifted(std::uint32_t m) const {
  if (is_standard()) return *this;
  if (m == 0 || m % root_order_ != 0) {
    throw InvalidArgument("basis: root order " + std::to_string(m) + " is not a multiple of " + std::to_string(root_order_));
  }
  const std::uint32_t f = m / root_order_;
  Basis b = *this;
  b.root_order_ = m;
  for (auto& row : b.rows_) {
    for (auto& e : row) e *= f;
  }
  return b;
}

Basis Basis::reduced() const {
  if (is_standard()) return *this;
  std::uint32_t g = root_order_;
  for (const auto& row : rows_) {
    for (auto e : row) g = std::gcd(g, e);
  }
  Basis b = *this;
  b.root_order_ = root_order_ / g;
  for (auto& row : b.rows_) {
    for (auto& e : row) e /= g;
  }
  return b;
}

MubFamily MubFamily::make(std::size_t dim, std::vector<Basis> bases, std::string provenance) {
  if (dim == 0) throw InvalidArgument("family: dimension must be >= 1");
  std::size_t standards = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].dim() != dim) {
      throw InvalidArgument("family: basis " + std::to_string(i) + " has dimension " + std::to_string(bases[i].dim()) +
                            ", expected " + std::to_string(dim));
    }
    if (bases[i].is_standard() && ++standards > 1) throw InvalidArgument("family: more than one standard basis");
  }
  MubFamily f;
  f.dim_ = dim;
  f.bases_ = std::move(bases);
  f.provenance_ = std::move(provenance);
  return f;
}

std::uint32_t MubFamily::root_order() const {
  std::uint32_t m = 1;
  for (const auto& b : bases_) m = std::lcm(m, b.root_order());
  return m;
}

MubFamily MubFamily::subfamily(const std::vector<std::size_t>& indices) const {
  std::vector<Basis> out;
  for (auto i : indices) out.push_back(bases_.at(i));
  return make(dim_, std::move(out), provenance_);
}

// ---------------------------------------------------------------------------
// Structured generators

Basis mub_standard(std::size_t dim) { return Basis::standard(dim); }

namespace {

template <typename Exponent>
MubFamily field_family(const GfField& f, const std::string& provenance, Exponent exponent) {
  const auto q = static_cast<std::size_t>(f.size());
  std::vector<GfElement> elems;
  elems.reserve(q);
  for (std::size_t i = 0; i < q; ++i) elems.push_back(f.element(i));
  std::vector<Basis> bases{Basis::standard(q)};
  for (std::size_t r = 0; r < q; ++r) {
    std::vector<std::vector<std::uint32_t>> rows(q, std::vector<std::uint32_t>(q));
    for (std::size_t k = 0; k < q; ++k) {
      for (std::size_t l = 0; l < q; ++l) rows[k][l] = exponent(elems[r], elems[k], elems[l]);
    }
    bases.push_back(Basis::phase(f.characteristic(), std::move(rows), "r=" + std::to_string(r)));
  }
  return MubFamily::make(q, std::move(bases), provenance);
}

}  // namespace

MubFamily mub_wf_odd(std::uint32_t p, unsigned n, std::uint64_t max_elements) {
  if (p == 2) throw InvalidArgument("wf: the quadratic trace family needs an odd prime; use kr for p = 2");
  const GfField f = GfField::make(p, n, max_elements);
  return field_family(f, "wf p=" + std::to_string(p) + " n=" + std::to_string(n),
                      [&](const GfElement& r, const GfElement& k, const GfElement& l) {
                        return f.trace(f.add(f.mul(r, f.mul(l, l)), f.mul(k, l)));
                      });
}

MubFamily mub_cubic(std::uint32_t p, unsigned n, std::uint64_t max_elements) {
  if (p == 2 || p == 3) throw InvalidArgument("cubic: the cubic variant needs p >= 5");
  const GfField f = GfField::make(p, n, max_elements);
  return field_family(f, "cubic p=" + std::to_string(p) + " n=" + std::to_string(n),
                      [&](const GfElement& r, const GfElement& k, const GfElement& l) {
                        const GfElement s = f.add(l, r);
                        return f.trace(f.add(f.pow(s, 3), f.mul(k, s)));
                      });
}

MubFamily mub_kr_even(unsigned n, std::uint64_t max_elements) {
  const Gr4Ring g = Gr4Ring::make(n, max_elements);
  const auto& t = g.teichmuller();
  const std::size_t q = t.size();
  std::vector<Basis> bases{Basis::standard(q)};
  for (std::size_t r = 0; r < q; ++r) {
    std::vector<std::vector<std::uint32_t>> rows(q, std::vector<std::uint32_t>(q));
    for (std::size_t k = 0; k < q; ++k) {
      const Gr4Element rk = g.add(t[r], g.scale(2, t[k]));
      for (std::size_t l = 0; l < q; ++l) rows[k][l] = g.trace(g.mul(rk, t[l]));
    }
    bases.push_back(Basis::phase(4, std::move(rows), "r=" + std::to_string(r)));
  }
  return MubFamily::make(q, std::move(bases), "kr n=" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Formula engine

ElementId evaluate_polynomial(const FiniteRing& r, const FormulaSpec& spec, ElementId k, ElementId l) {
  ElementId acc = spec.constant;
  for (const auto& t : spec.terms) {
    acc = r.add(acc, r.mul(t.coeff, r.mul(r.pow(k, t.k_degree), r.pow(l, t.l_degree))));
  }
  return acc;
}

Basis formula_basis(const FiniteRing& r, const ElementSet& s, const FormulaSpec& spec) {
  const std::size_t n = s.size();
  unsigned max_k = 0, max_l = 0;
  for (const auto& t : spec.terms) {
    max_k = std::max(max_k, t.k_degree);
    max_l = std::max(max_l, t.l_degree);
  }
  // pk[d][i] = s_i^d
  auto powers = [&](unsigned top) {
    std::vector<std::vector<ElementId>> p(top + 1, std::vector<ElementId>(n));
    for (std::size_t i = 0; i < n; ++i) {
      p[0][i] = r.one();
      for (unsigned d = 1; d <= top; ++d) p[d][i] = r.mul(p[d - 1][i], s[i]);
    }
    return p;
  };
  const auto pk = powers(max_k);
  const auto pl = powers(max_l);
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      ElementId acc = spec.constant;
      for (const auto& t : spec.terms) acc = r.add(acc, r.mul(t.coeff, r.mul(pk[t.k_degree][k], pl[t.l_degree][l])));
      rows[k][l] = spec.character(acc);
    }
  }
  return Basis::phase(spec.character.root_order, std::move(rows), spec.label);
}

MubFamily mub_generalized(const FiniteRing& r, const TransversalSet& t, const std::vector<FormulaSpec>& specs,
                          unsigned degree_bound) {
  const ElementSet& s = t.elements();
  for (ElementId x : s) {
    if (x >= r.order()) throw InvalidArgument("generalized: transversal does not belong to this ring");
  }
  std::vector<Basis> bases{Basis::standard(s.size())};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    if (!is_character_of(r, spec.character)) {
      throw InvalidArgument("generalized: spec " + std::to_string(i) + " does not carry an additive character of " + r.name());
    }
    if (spec.constant >= r.order()) throw InvalidArgument("generalized: constant out of range in spec " + std::to_string(i));
    for (const auto& term : spec.terms) {
      if (term.coeff >= r.order()) throw InvalidArgument("generalized: coefficient out of range in spec " + std::to_string(i));
      if (term.k_degree > degree_bound || term.l_degree > degree_bound) {
        throw InvalidArgument("generalized: term degree exceeds the bound " + std::to_string(degree_bound) + " in spec " +
                              std::to_string(i));
      }
    }
    bases.push_back(formula_basis(r, s, spec));
  }
  return MubFamily::make(s.size(), std::move(bases), "generalized " + r.name());
}

AdditiveCharacter trace_character(const GfField& f) {
  AdditiveCharacter chi;
  chi.root_order = f.characteristic();
  chi.exponents.resize(f.size());
  for (std::uint64_t i = 0; i < f.size(); ++i) chi.exponents[i] = f.trace(f.element(i));
  return chi;
}

AdditiveCharacter trace_character(const Gr4Ring& g) {
  AdditiveCharacter chi;
  chi.root_order = 4;
  chi.exponents.resize(g.size());
  for (std::uint64_t i = 0; i < g.size(); ++i) chi.exponents[i] = g.trace(g.element(i));
  return chi;
}

std::vector<FormulaSpec> quadratic_trace_specs(const GfField& f) {
  const AdditiveCharacter chi = trace_character(f);
  const auto one = static_cast<ElementId>(f.index_of(f.one()));
  std::vector<FormulaSpec> specs;
  for (std::uint64_t r = 0; r < f.size(); ++r) {
    specs.push_back({chi, {{static_cast<ElementId>(r), 0, 2}, {one, 1, 1}}, 0, "r=" + std::to_string(r)});
  }
  return specs;
}

std::vector<FormulaSpec> galois_ring_trace_specs(const Gr4Ring& g) {
  const AdditiveCharacter chi = trace_character(g);
  const auto two = static_cast<ElementId>(g.index_of(g.scale(2, g.one())));
  std::vector<FormulaSpec> specs;
  const auto& t = g.teichmuller();
  for (std::size_t r = 0; r < t.size(); ++r) {
    specs.push_back({chi, {{static_cast<ElementId>(g.index_of(t[r])), 0, 1}, {two, 1, 1}}, 0, "r=" + std::to_string(r)});
  }
  return specs;
}

// ---------------------------------------------------------------------------
// Tensor composition

MubFamily mub_tensor(const MubFamily& f1, const MubFamily& f2) {
  if (f1.size() == 0 || f2.size() == 0) throw InvalidArgument("tensor: both families must be nonempty");
  const std::size_t n1 = f1.dim(), n2 = f2.dim(), n = n1 * n2;
  const std::size_t t = std::min(f1.size(), f2.size());
  std::vector<Basis> bases;
  for (std::size_t i = 0; i < t; ++i) {
    const Basis& a = f1[i];
    const Basis& b = f2[i];
    const std::string label = a.label() + " (x) " + b.label();
    if (a.is_standard() && b.is_standard()) {
      bases.push_back(Basis::standard(n, label));
      continue;
    }
    if (a.is_standard() || b.is_standard()) {
      throw InvalidArgument("tensor: basis " + std::to_string(i) + " pairs a standard basis with a phase basis");
    }
    const std::uint32_t m = std::lcm(a.root_order(), b.root_order());
    const std::uint32_t fa = m / a.root_order(), fb = m / b.root_order();
    std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
    for (std::size_t ka = 0; ka < n1; ++ka) {
      for (std::size_t kb = 0; kb < n2; ++kb) {
        auto& row = rows[ka * n2 + kb];
        for (std::size_t la = 0; la < n1; ++la) {
          for (std::size_t lb = 0; lb < n2; ++lb) {
            row[la * n2 + lb] = (a.exponents()[ka][la] * fa + b.exponents()[kb][lb] * fb) % m;
          }
        }
      }
    }
    bases.push_back(Basis::phase(m, std::move(rows), label));
  }
  return MubFamily::make(n, std::move(bases), "tensor(" + f1.provenance() + "; " + f2.provenance() + ")");
}

}  // namespace mubkit
