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

#include "mubkit/verify.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "mubkit/clique.hpp"
#include "mubkit/errors.hpp"

namespace mubkit {

namespace {

// Counts of f_l - e_l over l at the common root order m.
std::vector<std::int64_t> difference_counts(const std::vector<std::uint32_t>& e, std::uint32_t fe,
                                            const std::vector<std::uint32_t>& f, std::uint32_t ff, std::uint32_t m) {
  std::vector<std::int64_t> counts(m, 0);
  for (std::size_t l = 0; l < e.size(); ++l) {
    const std::uint64_t a = std::uint64_t{e[l]} * fe % m;
    const std::uint64_t b = std::uint64_t{f[l]} * ff % m;
    ++counts[(b + m - a) % m];
  }
  return counts;
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string format_complex(std::complex<double> z) {
  return "(" + format_double(z.real()) + ", " + format_double(z.imag()) + ")";
}

}  // namespace

ExactInner inner_product(const PhaseVector& v, const PhaseVector& w) {
  if (v.dim() != w.dim()) throw InvalidArgument("inner product: dimension mismatch");
  const std::uint32_t m = std::lcm(v.root_order, w.root_order);
  const auto n = static_cast<std::uint64_t>(v.dim());
  return {CycloNumber::from_exponent_counts(m, difference_counts(v.exponents, m / v.root_order, w.exponents,
                                                                 m / w.root_order, m)),
          n * n};
}

ExactInner inner_product(const Basis& a, std::size_t i, const Basis& b, std::size_t j) {
  if (a.dim() != b.dim()) throw InvalidArgument("inner product: dimension mismatch");
  if (i >= a.dim() || j >= b.dim()) throw InvalidArgument("inner product: vector index out of range");
  const auto n = static_cast<std::uint64_t>(a.dim());
  if (a.is_standard() && b.is_standard()) return {CycloNumber::integer(1, i == j ? 1 : 0), 1};
  if (a.is_standard()) {
    // <e_i, w> = w_i
    return {CycloNumber::root(b.root_order(), b.exponents()[j][i]), n};
  }
  if (b.is_standard()) {
    // <v, e_j> = conj(v_j)
    const std::uint32_t m = a.root_order();
    return {CycloNumber::root(m, (m - a.exponents()[i][j]) % m), n};
  }
  return inner_product(a.vector(i), b.vector(j));
}

Verdict check_orthonormal(const Basis& b) {
  Verdict v;
  if (b.is_standard()) return v;
  const std::uint32_t m = b.root_order();
  const auto n = static_cast<std::int64_t>(b.dim());
  const auto& rows = b.exponents();
  for (std::size_t i = 0; i < rows.size() && v.pass; ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      const auto s = CycloNumber::from_exponent_counts(m, difference_counts(rows[i], 1, rows[j], 1, m));
      if (!s.equals_integer(i == j ? n : 0)) {
        v.pass = false;
        v.witnesses.push_back({0, 0, i, j, s.to_string() + " / " + std::to_string(n)});
        break;
      }
    }
  }
  return v;
}

Verdict check_unbiased_pair(const Basis& a, const Basis& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("unbiasedness: dimension mismatch");
  Verdict v;
  const std::size_t n = a.dim();
  if (a.is_standard() && b.is_standard()) {
    if (n != 1) {
      v.pass = false;
      v.witnesses.push_back({0, 1, 0, 0, "|<e_0, e_0>|^2 = 1, expected 1/" + std::to_string(n)});
    }
    return v;
  }
  // Phase entries all have modulus 1/sqrt(N).
  if (a.is_standard() || b.is_standard()) return v;

  const std::uint32_t m = std::lcm(a.root_order(), b.root_order());
  const std::uint32_t fa = m / a.root_order(), fb = m / b.root_order();
  for (std::size_t i = 0; i < n && v.pass; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto counts = difference_counts(a.exponents()[i], fa, b.exponents()[j], fb, m);
      const auto norm = norm_squared_from_counts(m, counts);
      if (!norm.equals_integer(static_cast<std::int64_t>(n))) {
        v.pass = false;
        v.witnesses.push_back({0, 1, i, j, "|S|^2 = " + norm.to_string() + ", expected " + std::to_string(n)});
        break;
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Float mode

FloatBasis to_float(const Basis& b) {
  const std::size_t n = b.dim();
  FloatBasis out;
  out.vectors.assign(n, FloatVector(n, {0.0, 0.0}));
  if (b.is_standard()) {
    for (std::size_t i = 0; i < n; ++i) out.vectors[i][i] = 1.0;
    return out;
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const double step = 2.0 * std::numbers::pi / b.root_order();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) out.vectors[k][l] = std::polar(scale, step * b.exponents()[k][l]);
  }
  return out;
}

FloatFamily to_float(const MubFamily& f) {
  FloatFamily out;
  out.dim = f.dim();
  out.provenance = f.provenance();
  const double expected = 1.0 / static_cast<double>(f.dim());
  for (const auto& b : f.bases()) {
    out.bases.push_back(to_float(b));
    if (b.is_standard()) continue;
    for (const auto& vec : out.bases.back().vectors) {
      for (const auto& z : vec) {
        if (std::abs(std::norm(z) - expected) > 1e-12) throw PropertyViolation("float export: component modulus is not 1/sqrt(N)");
      }
    }
  }
  return out;
}

std::complex<double> inner_product(const FloatVector& v, const FloatVector& w) {
  if (v.size() != w.size()) throw InvalidArgument("inner product: dimension mismatch");
  std::complex<double> acc = 0.0;
  for (std::size_t l = 0; l < v.size(); ++l) acc += std::conj(v[l]) * w[l];
  return acc;
}

Verdict check_orthonormal(const FloatBasis& b, double tol) {
  Verdict v;
  const auto& vs = b.vectors;
  for (std::size_t i = 0; i < vs.size() && v.pass; ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      const auto z = inner_product(vs[i], vs[j]);
      if (std::abs(z - std::complex<double>(i == j ? 1.0 : 0.0)) > tol) {
        v.pass = false;
        v.witnesses.push_back({0, 0, i, j, format_complex(z)});
        break;
      }
    }
  }
  return v;
}

Verdict check_unbiased_pair(const FloatBasis& a, const FloatBasis& b, double tol) {
  if (a.vectors.size() != b.vectors.size()) throw InvalidArgument("unbiasedness: dimension mismatch");
  Verdict v;
  const double target = 1.0 / static_cast<double>(a.vectors.size());
  for (std::size_t i = 0; i < a.vectors.size() && v.pass; ++i) {
    for (std::size_t j = 0; j < b.vectors.size(); ++j) {
      const double sq = std::norm(inner_product(a.vectors[i], b.vectors[j]));
      if (std::abs(sq - target) > tol) {
        v.pass = false;
        v.witnesses.push_back({0, 1, i, j, "|<a,b>|^2 = " + format_double(sq)});
        break;
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Reports

bool VerificationReport::all_pass() const {
  for (bool b : orthonormal) {
    if (!b) return false;
  }
  for (const auto& row : unbiased) {
    for (bool b : row) {
      if (!b) return false;
    }
  }
  return true;
}

namespace {

template <typename Bases, typename Ortho, typename Unbiased>
VerificationReport build_report(std::size_t dim, const Bases& bases, Ortho ortho, Unbiased unbiased) {
  VerificationReport rep;
  rep.dim = dim;
  const std::size_t t = bases.size();
  rep.orthonormal.assign(t, true);
  rep.unbiased.assign(t, std::vector<bool>(t, true));
  for (std::size_t i = 0; i < t; ++i) {
    Verdict v = ortho(bases[i]);
    rep.orthonormal[i] = v.pass;
    for (auto w : v.witnesses) {
      w.basis_a = w.basis_b = i;
      rep.witnesses.push_back(std::move(w));
    }
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      Verdict v = unbiased(bases[i], bases[j]);
      rep.unbiased[i][j] = rep.unbiased[j][i] = v.pass;
      for (auto w : v.witnesses) {
        w.basis_a = i;
        w.basis_b = j;
        rep.witnesses.push_back(std::move(w));
      }
    }
  }
  return rep;
}

}  // namespace

VerificationReport verify_family(const MubFamily& f) {
  auto rep = build_report(
      f.dim(), f.bases(), [](const Basis& b) { return check_orthonormal(b); },
      [](const Basis& a, const Basis& b) { return check_unbiased_pair(a, b); });
  rep.mode = VerifyMode::kExact;
  return rep;
}

VerificationReport verify_family(const FloatFamily& f, double tol) {
  for (const auto& b : f.bases) {
    if (b.vectors.size() != f.dim) throw InvalidArgument("float family: basis has the wrong number of vectors");
    for (const auto& v : b.vectors) {
      if (v.size() != f.dim) throw InvalidArgument("float family: vector has the wrong dimension");
    }
  }
  auto rep = build_report(
      f.dim, f.bases, [tol](const FloatBasis& b) { return check_orthonormal(b, tol); },
      [tol](const FloatBasis& a, const FloatBasis& b) { return check_unbiased_pair(a, b, tol); });
  rep.mode = VerifyMode::kFloat;
  rep.tolerance = tol;
  return rep;
}

MaxSubsetResult mub_max_subset(const MubFamily& f, std::size_t node_limit) {
  MaxSubsetResult out;
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (check_orthonormal(f[i]).pass) {
      nodes.push_back(i);
    } else {
      out.dropped.push_back(i);
    }
  }
  if (nodes.size() > node_limit) {
    throw ResourceLimit("max subset: " + std::to_string(nodes.size()) + " bases exceed the clique bound " +
                        std::to_string(node_limit));
  }
  Graph g(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (check_unbiased_pair(f[nodes[i]], f[nodes[j]]).pass) g.add_edge(i, j);
    }
  }
  for (auto v : max_clique(g)) out.witness.push_back(nodes[v]);
  out.size = out.witness.size();
  if (out.size > f.dim() + 1) throw PropertyViolation("max subset: more than N+1 mutually unbiased bases");
  return out;
}

std::uint64_t mub_bound(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("bound: N must be >= 2");
  std::uint64_t best = UINT64_MAX;
  for (const auto& pp : factorize(n)) best = std::min(best, pp.value());
  return best + 1;
}

}  // namespace mubkit
