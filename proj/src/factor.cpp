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

#include "mubkit/factor.hpp"

#include <cmath>
#include <numeric>

#include <Eigen/SVD>

#include "mubkit/cyclo.hpp"
#include "mubkit/errors.hpp"

namespace mubkit {

namespace {

void check_dims(std::size_t dim, std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0 || n1 * n2 != dim) {
    throw InvalidArgument("factor: dimension " + std::to_string(dim) + " is not " + std::to_string(n1) + " x " +
                          std::to_string(n2));
  }
}

std::string pair_name(std::size_t v, std::size_t n2) {
  return "vector " + std::to_string(v) + " = (" + std::to_string(v / n2) + "," + std::to_string(v % n2) + ")";
}

// |<x, y>|^2 for unnormalized unit-modulus phase rows, or nullopt if irrational.
std::optional<std::int64_t> phase_overlap_sq(const std::vector<std::uint32_t>& x, std::uint32_t mx,
                                             const std::vector<std::uint32_t>& y, std::uint32_t my) {
  const std::uint32_t m = std::lcm(mx, my);
  std::vector<std::int64_t> counts(m, 0);
  for (std::size_t l = 0; l < x.size(); ++l) {
    const std::uint64_t a = std::uint64_t{x[l]} * (m / mx), b = std::uint64_t{y[l]} * (m / my);
    ++counts[(b + m - a % m) % m];
  }
  return norm_squared_from_counts(m, counts).to_integer();
}

}  // namespace

FactorResult factor_tensor_basis(const Basis& basis, std::size_t n1, std::size_t n2) {
  check_dims(basis.dim(), n1, n2);
  const std::size_t n = n1 * n2;
  if (basis.is_standard()) {
    // e_{i n2 + j} = e_i (x) e_j
    return {Basis::standard(n1, basis.label()), Basis::standard(n2, basis.label()), Rational(1), Rational(1)};
  }
  const std::uint32_t m = basis.root_order();
  std::vector<std::vector<std::uint32_t>> a_rows(n1), b_rows(n2);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& e = basis.exponents()[v];
    auto at = [&](std::size_t l1, std::size_t l2) { return std::uint64_t{e[l1 * n2 + l2]}; };
    for (std::size_t l1 = 0; l1 < n1; ++l1) {
      for (std::size_t l2 = 0; l2 < n2; ++l2) {
        // Vanishing 2x2 minor through the (0, 0) corner.
        if ((at(l1, l2) + at(0, 0) + 2 * m - at(l1, 0) - at(0, l2)) % m != 0) {
          throw NotAProduct(v, "factor: " + pair_name(v, n2) + " of basis '" + basis.label() + "' has rank > 1 (minor at " +
                                   std::to_string(l1) + "," + std::to_string(l2) + ")");
        }
      }
    }
    std::vector<std::uint32_t> a(n1), b(n2);
    for (std::size_t l1 = 0; l1 < n1; ++l1) a[l1] = static_cast<std::uint32_t>((at(l1, 0) + m - at(0, 0)) % m);
    for (std::size_t l2 = 0; l2 < n2; ++l2) b[l2] = static_cast<std::uint32_t>((at(0, l2) + m - at(0, 0)) % m);
    const std::size_t i = v / n2, j = v % n2;
    if (j == 0) {
      a_rows[i] = std::move(a);
    } else if (a_rows[i] != a) {
      throw LabelingError(v, "factor: first factor of " + pair_name(v, n2) + " differs from that of (" + std::to_string(i) + ",0)");
    }
    if (i == 0) {
      b_rows[j] = std::move(b);
    } else if (b_rows[j] != b) {
      throw LabelingError(v, "factor: second factor of " + pair_name(v, n2) + " differs from that of (0," + std::to_string(j) + ")");
    }
  }
  FactorResult out{Basis::phase(m, std::move(a_rows), basis.label()).reduced(),
                   Basis::phase(m, std::move(b_rows), basis.label()).reduced(), Rational(0), Rational(0)};
  // |a|^2 with unit-modulus entries; |b|^2 with entries of modulus 1/sqrt(N).
  out.l_a = Rational(static_cast<std::int64_t>(n1));
  out.l_b = Rational(static_cast<std::int64_t>(n2), static_cast<std::int64_t>(n));
  if (out.l_a * out.l_b != Rational(1)) throw PropertyViolation("factor: L_a L_b != 1");
  return out;
}

bool FamilyFactorResult::identities_hold() const {
  for (const auto& r : per_basis) {
    if (r.l_a * r.l_b != Rational(1)) return false;
  }
  for (const auto& p : pairs) {
    if (!p.constant || !p.a_identity || !p.b_identity) return false;
  }
  return true;
}

FamilyFactorResult factor_tensor_family(const MubFamily& f, std::size_t n1, std::size_t n2) {
  check_dims(f.dim(), n1, n2);
  const std::int64_t n = static_cast<std::int64_t>(f.dim());
  std::vector<FactorResult> per;
  std::vector<Basis> as, bs;
  for (const auto& b : f.bases()) {
    per.push_back(factor_tensor_basis(b, n1, n2));
    as.push_back(per.back().a);
    bs.push_back(per.back().b);
  }

  // |<x_i, y_j>|^2 for factor bases; `scale` divides phase overlaps, `unit` is
  // the value when exactly one side is standard.
  auto overlap = [](const Basis& x, std::size_t i, const Basis& y, std::size_t j, Rational scale,
                    Rational unit) -> std::optional<Rational> {
    if (x.is_standard() && y.is_standard()) return Rational(i == j ? 1 : 0);
    if (x.is_standard() || y.is_standard()) return unit;
    auto v = phase_overlap_sq(x.exponents()[i], x.root_order(), y.exponents()[j], y.root_order());
    if (!v) return std::nullopt;
    return Rational(*v) / scale;
  };

  std::vector<PairConstants> pairs;
  for (std::size_t r = 0; r < per.size(); ++r) {
    for (std::size_t s = r + 1; s < per.size(); ++s) {
      PairConstants pc;
      pc.first = r;
      pc.second = s;
      bool have = false;
      // a-side: unnormalized unit-modulus entries, standard vectors have |e|^2 = 1.
      // b-side: phase entries carry 1/sqrt(N), so overlaps are divided by N^2 and a
      // standard/phase overlap is 1/N.
      for (std::size_t i = 0; i < n1 && pc.constant; ++i) {
        for (std::size_t j = 0; j < n1 && pc.constant; ++j) {
          auto ka = overlap(as[r], i, as[s], j, Rational(1), Rational(1));
          if (!ka || (have && *ka != pc.k_a_sq)) pc.constant = false;
          if (ka && !have) pc.k_a_sq = *ka, have = true;
        }
      }
      have = false;
      for (std::size_t i = 0; i < n2 && pc.constant; ++i) {
        for (std::size_t j = 0; j < n2 && pc.constant; ++j) {
          auto kb = overlap(bs[r], i, bs[s], j, Rational(n * n), Rational(1, n));
          if (!kb || (have && *kb != pc.k_b_sq)) pc.constant = false;
          if (kb && !have) pc.k_b_sq = *kb, have = true;
        }
      }
      pc.a_identity = per[r].l_a * per[s].l_a == Rational(static_cast<std::int64_t>(n1)) * pc.k_a_sq;
      pc.b_identity = per[r].l_b * per[s].l_b == Rational(static_cast<std::int64_t>(n2)) * pc.k_b_sq;
      pairs.push_back(pc);
    }
  }
  FamilyFactorResult out{MubFamily::make(n1, std::move(as), "factor A of " + f.provenance()),
                         MubFamily::make(n2, std::move(bs), "factor B of " + f.provenance()), std::move(per),
                         std::move(pairs)};
  return out;
}

// ---------------------------------------------------------------------------
// Float path

FloatFactorResult factor_tensor_basis(const FloatBasis& basis, std::size_t n1, std::size_t n2, double tol) {
  check_dims(basis.vectors.size(), n1, n2);
  const std::size_t n = n1 * n2;
  FloatFactorResult out;
  out.a.vectors.assign(n1, {});
  out.b.vectors.assign(n2, {});
  out.l_a = 1.0;
  out.l_b = 0.0;

  auto close = [tol](const FloatVector& x, const FloatVector& y) {
    for (std::size_t l = 0; l < x.size(); ++l) {
      if (std::abs(x[l] - y[l]) > std::sqrt(tol)) return false;
    }
    return true;
  };
  // Rotate so the first component above the noise floor is real positive.
  auto fix_phase = [](FloatVector& x) {
    for (const auto& z : x) {
      if (std::abs(z) > 1e-12) {
        const std::complex<double> c = std::conj(z) / std::abs(z);
        for (auto& w : x) w *= c;
        return;
      }
    }
  };

  for (std::size_t v = 0; v < n; ++v) {
    const auto& vec = basis.vectors[v];
    if (vec.size() != n) throw InvalidArgument("factor: vector has the wrong dimension");
    Eigen::MatrixXcd mat(n1, n2);
    for (std::size_t l1 = 0; l1 < n1; ++l1) {
      for (std::size_t l2 = 0; l2 < n2; ++l2) mat(l1, l2) = vec[l1 * n2 + l2];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double ratio = sv.size() > 1 && sv(0) > 0 ? sv(1) / sv(0) : 0.0;
    out.worst_singular_ratio = std::max(out.worst_singular_ratio, ratio);
    if (ratio > tol) {
      throw NotAProduct(v, "factor: " + pair_name(v, n2) + " has sigma_2 / sigma_1 = " + std::to_string(ratio));
    }
    // mat = sigma u v^H
    FloatVector a(n1), b(n2);
    for (std::size_t l1 = 0; l1 < n1; ++l1) a[l1] = svd.matrixU()(l1, 0);
    for (std::size_t l2 = 0; l2 < n2; ++l2) b[l2] = sv(0) * std::conj(svd.matrixV()(l2, 0));
    fix_phase(a);
    fix_phase(b);
    const double lb = std::norm(sv(0));
    out.l_b = std::max(out.l_b, lb);
    const std::size_t i = v / n2, j = v % n2;
    if (j == 0) {
      out.a.vectors[i] = std::move(a);
    } else if (!close(out.a.vectors[i], a)) {
      throw LabelingError(v, "factor: first factor of " + pair_name(v, n2) + " differs from that of (" + std::to_string(i) + ",0)");
    }
    if (i == 0) {
      out.b.vectors[j] = std::move(b);
    } else if (!close(out.b.vectors[j], b)) {
      throw LabelingError(v, "factor: second factor of " + pair_name(v, n2) + " differs from that of (0," + std::to_string(j) + ")");
    }
  }
  if (std::abs(out.l_a * out.l_b - 1.0) > tol) throw PropertyViolation("factor: L_a L_b != 1");
  return out;
}

}  // namespace mubkit
