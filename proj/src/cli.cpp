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

#include "mubkit/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "mubkit/errors.hpp"
#include "mubkit/factor.hpp"
#include "mubkit/family_io.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/nogo.hpp"
#include "mubkit/numtheory.hpp"
#include "mubkit/ring.hpp"
#include "mubkit/verify.hpp"

namespace mubkit {

namespace {

// Raised for argument combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  // gen
  std::string method;
  std::uint32_t p = 0;
  unsigned n = 1;
  std::string ring;
  std::string specs_path;
  std::string s_text;
  std::string n_text;
  std::string out;
  // verify / export / tensor / factor
  std::string file;
  std::string file_b;
  std::string mode = "exact";
  double tol = kDefaultTolerance;
  std::string report;
  std::string dims;
  std::string out_a;
  std::string out_b;
  // bound
  std::uint64_t bound_n = 0;
  // ring
  std::string action;
  std::uint64_t d1 = 0;
  // search
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
  bool no_known = false;
};

void print_summary(std::ostream& out, const MubFamily& f) {
  out << "dimension " << f.dim() << ", " << f.size() << " bases, root order " << f.root_order() << "\n";
}

void maybe_save(std::ostream& out, const MubFamily& f, const std::string& path) {
  if (path.empty()) return;
  save_family(f, path);
  out << "wrote " << path << "\n";
}

// Explicit (S, N) if given, otherwise the generalized Teichmuller transversal.
TransversalSet pick_transversal(const FiniteRing& r, const Options& o) {
  if (o.s_text.empty()) {
    if (!o.n_text.empty()) throw UsageError("--N requires --S");
    return teichmuller_transversal(r);
  }
  const ElementSet s = parse_element_set(r, o.s_text);
  const ElementSet n = o.n_text.empty() ? ring_nilradical(r) : parse_element_set(r, o.n_text);
  return transversal_check(r, s, n);
}

int cmd_gen(const Options& o, std::ostream& out) {
  MubFamily f;
  if (o.method == "wf" || o.method == "cubic") {
    if (o.p == 0) throw UsageError("gen " + o.method + " needs --p");
    f = o.method == "wf" ? mub_wf_odd(o.p, o.n) : mub_cubic(o.p, o.n);
  } else if (o.method == "kr") {
    f = mub_kr_even(o.n);
  } else {
    if (o.ring.empty() || o.specs_path.empty()) throw UsageError("gen generalized needs --ring and --specs");
    const FiniteRing r = ring_from_catalog(o.ring);
    const TransversalSet t = pick_transversal(r, o);
    f = mub_generalized(r, t, specs_from_json(r, read_text_file(o.specs_path)));
  }
  out << "generated " << o.method << ": ";
  print_summary(out, f);
  maybe_save(out, f, o.out);
  return kExitOk;
}

void print_report(std::ostream& out, const VerificationReport& rep) {
  out << "mode: " << (rep.mode == VerifyMode::kExact ? "exact" : "float");
  if (rep.mode == VerifyMode::kFloat) out << " (tolerance " << rep.tolerance << ")";
  out << "\ndimension: " << rep.dim << ", bases: " << rep.orthonormal.size() << "\n";
  for (std::size_t i = 0; i < rep.orthonormal.size(); ++i) {
    out << "basis " << i << ": " << (rep.orthonormal[i] ? "orthonormal" : "NOT orthonormal") << "\n";
  }
  out << "unbiased pairs (1 = unbiased):\n";
  for (const auto& row : rep.unbiased) {
    out << " ";
    for (bool b : row) out << ' ' << (b ? '1' : '0');
    out << "\n";
  }
  for (const auto& w : rep.witnesses) {
    out << "witness: bases (" << w.basis_a << ", " << w.basis_b << "), vectors (" << w.vector_a << ", " << w.vector_b
        << "): " << w.value << "\n";
  }
  out << (rep.all_pass() ? "all checks passed" : "verification FAILED") << "\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.mode != "exact" && o.mode != "float") throw UsageError("--mode must be exact or float");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  const std::string text = read_text_file(o.file);
  VerificationReport rep;
  if (detect_family_kind(text) == FamilyFileKind::kFloat) {
    if (o.mode == "exact") throw UsageError("float families can only be verified with --mode float");
    rep = verify_family(float_family_from_json(text), o.tol);
  } else {
    const MubFamily f = family_from_json(text);
    rep = o.mode == "exact" ? verify_family(f) : verify_family(to_float(f), o.tol);
  }
  print_report(out, rep);
  if (!o.report.empty()) {
    write_text_file(o.report, report_to_json(rep));
    out << "wrote " << o.report << "\n";
  }
  return rep.all_pass() ? kExitOk : kExitFailed;
}

int cmd_export(const Options& o, std::ostream& out) {
  const FloatFamily f = to_float(load_family(o.file));
  save_float_family(f, o.out);
  out << "exported " << f.bases.size() << " bases of dimension " << f.dim << " to " << o.out << "\n";
  return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  if (o.bound_n < 2) throw UsageError("bound needs N >= 2");
  const auto factors = factorize(o.bound_n);
  out << "N = " << o.bound_n << " = " << format_factorization(factors) << "\n";
  out << mub_bound(o.bound_n)
      << (factors.size() == 1 ? " (prime power: complete set constructible)"
                              : " (complete set impossible for formula families)")
      << "\n";
  return kExitOk;
}

std::string join_labels(const FiniteRing& r, const std::vector<ElementId>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + r.label(xs[i]);
  return s;
}

int cmd_ring(const Options& o, std::ostream& out) {
  const FiniteRing r = ring_from_catalog(o.ring);
  out << "ring " << r.name() << ", order " << r.order() << "\n";
  if (o.action == "sylow") {
    const auto d = ring_sylow(r);
    out << "components: ";
    for (std::size_t i = 0; i < d.size(); ++i) out << (i ? ", " : "") << format_set(r, d.components[i]);
    out << "\nunities: " << join_labels(r, d.unities) << "\n";
  } else if (o.action == "nilradical") {
    out << "nilradical: " << format_set(r, ring_nilradical(r)) << "\n";
  } else if (o.action == "units") {
    const auto u = ring_units(r);
    out << "units: " << format_set(r, u.units) << "\n";
    for (auto x : u.units) out << "  " << r.label(x) << "^-1 = " << r.label(*u.inverse[x]) << "\n";
  } else if (o.action == "transversal") {
    try {
      const auto t = pick_transversal(r, o);
      out << "valid transversal: S = " << format_set(r, t.elements()) << ", N = " << format_set(r, t.ideal()) << "\n";
    } catch (const ValidationError& e) {
      out << "invalid: " << e.what() << "\n";
      return kExitFailed;
    }
  } else if (o.action == "split") {
    const auto t = pick_transversal(r, o);
    RingDecomposition d;
    const auto factors = factorize(r.order());
    if (o.d1 != 0) {
      d = ring_coprime_split(r, o.d1);
    } else if (factors.size() >= 2) {
      d = ring_coprime_split(r, factors.front().value());
    } else {
      d = RingDecomposition::from_unities(r, {r.one(), r.zero()});
    }
    try {
      const auto split = transversal_split(r, t, d);
      out << "S = " << format_set(r, t.elements()) << ", N = " << format_set(r, t.ideal()) << "\n";
      out << "R1 = " << format_set(r, d.components[0]) << " (unity " << r.label(d.unities[0]) << ")\n";
      out << "R2 = " << format_set(r, d.components[1]) << " (unity " << r.label(d.unities[1]) << ")\n";
      out << "S1 = " << format_set(r, split.first) << "\nS2 = " << format_set(r, split.second) << "\n";
      out << "|S| = " << t.size() << " = " << split.first.size() << " * " << split.second.size() << "\n";
    } catch (const PropertyViolation& e) {
      out << "split FAILED: " << e.what() << "\n";
      return kExitFailed;
    }
  } else {
    throw UsageError("unknown ring action '" + o.action + "'");
  }
  return kExitOk;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  const MubFamily f = mub_tensor(load_family(o.file), load_family(o.file_b));
  out << "tensor: ";
  print_summary(out, f);
  maybe_save(out, f, o.out);
  return kExitOk;
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--dims expects N1,N2");
  try {
    std::size_t p1 = 0, p2 = 0;
    const auto a = std::stoull(text.substr(0, comma), &p1);
    const auto b = std::stoull(text.substr(comma + 1), &p2);
    if (p1 != comma || p2 != text.size() - comma - 1 || a == 0 || b == 0) throw UsageError("--dims expects N1,N2");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--dims expects N1,N2");
  }
}

int cmd_factor(const Options& o, std::ostream& out) {
  const auto [n1, n2] = parse_dims(o.dims);
  const MubFamily f = load_family(o.file);
  FamilyFactorResult res;
  try {
    res = factor_tensor_family(f, n1, n2);
  } catch (const NotAProduct& e) {
    out << "not a product: " << e.what() << "\n";
    return kExitFailed;
  } catch (const LabelingError& e) {
    out << "labeling error: " << e.what() << "\n";
    return kExitFailed;
  }
  for (std::size_t i = 0; i < res.per_basis.size(); ++i) {
    const auto& b = res.per_basis[i];
    out << "basis " << i << ": L_a = " << b.l_a << ", L_b = " << b.l_b << ", L_a L_b = " << b.l_a * b.l_b << "\n";
  }
  for (const auto& p : res.pairs) {
    out << "bases (" << p.first << ", " << p.second << "): ";
    if (!p.constant) {
      out << "cross moduli not constant\n";
      continue;
    }
    out << "K_A^2 = " << p.k_a_sq << ", K_B^2 = " << p.k_b_sq << (p.a_identity && p.b_identity ? "" : " (identity FAILS)")
        << "\n";
  }
  out << "factor A: ";
  print_summary(out, res.a);
  out << "factor B: ";
  print_summary(out, res.b);
  maybe_save(out, res.a, o.out_a);
  maybe_save(out, res.b, o.out_b);
  return res.identities_hold() ? kExitOk : kExitFailed;
}

int cmd_search(const Options& o, std::ostream& out) {
  const FiniteRing r = ring_from_catalog(o.ring);
  const TransversalSet t = pick_transversal(r, o);
  SearchOptions so;
  so.budget = o.budget;
  so.seed = o.seed;
  so.force_known = !o.no_known;
  SearchResult res;
  try {
    res = nogo_search(r, t, so);
  } catch (const PropertyViolation& e) {
    out << "PROPERTY VIOLATION: " << e.what() << "\n";
    return kExitFailed;
  }
  out << "ring " << r.name() << ", S = " << format_set(r, t.elements()) << ", N = " << format_set(r, t.ideal()) << "\n";
  out << "specs: " << res.sampled << " (" << res.forced << " known), orthonormal: " << res.orthonormal
      << ", distinct: " << res.distinct << "\n";
  out << "max mutually unbiased subset: " << res.max_size;
  if (res.bound) out << " ≤ bound " << *res.bound;
  if (res.max_size == res.dimension + 1) out << " (complete)";
  out << "\n";
  maybe_save(out, res.best, o.out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutually unbiased bases: construction, exact verification, and bounds", "mubkit"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a family and write it as JSON");
  gen->add_option("method", o.method, "wf | cubic | kr | generalized")
      ->required()
      ->check(CLI::IsMember({"wf", "cubic", "kr", "generalized"}));
  gen->add_option("--p", o.p, "Characteristic (wf, cubic)");
  gen->add_option("--n", o.n, "Extension degree")->check(CLI::PositiveNumber);
  gen->add_option("--ring", o.ring, "Catalog ring (generalized)");
  gen->add_option("--specs", o.specs_path, "Formula specs JSON (generalized)");
  gen->add_option("--S", o.s_text, "Index set S, comma-separated element indices");
  gen->add_option("--N", o.n_text, "Nilpotent ideal N (default: nilradical)");
  gen->add_option("-o,--out", o.out, "Output family file");

  auto* verify = app.add_subcommand("verify", "Check orthonormality and pairwise unbiasedness");
  verify->add_option("file", o.file)->required();
  verify->add_option("--mode", o.mode, "exact | float")->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--tol", o.tol, "Float tolerance");
  verify->add_option("--report", o.report, "Write a JSON report");

  auto* exp = app.add_subcommand("export", "Convert an exact family to the float format");
  exp->add_option("file", o.file)->required();
  exp->add_option("-o,--out", o.out)->required();

  auto* bound = app.add_subcommand("bound", "Upper bound for formula families in dimension N");
  bound->add_option("N", o.bound_n)->required();

  auto* ring = app.add_subcommand("ring", "Inspect a catalog ring");
  ring->add_option("spec", o.ring, "zN | gf:p,n | gr4:n | zp_dual:p | prod:A,B")->required();
  ring->add_option("action", o.action, "sylow | nilradical | units | transversal | split")
      ->required()
      ->check(CLI::IsMember({"sylow", "nilradical", "units", "transversal", "split"}));
  ring->add_option("--S", o.s_text);
  ring->add_option("--N", o.n_text);
  ring->add_option("--d1", o.d1, "Split off the Sylow parts for the primes of d1");

  auto* tensor = app.add_subcommand("tensor", "Tensor two families basis by basis");
  tensor->add_option("file_a", o.file)->required();
  tensor->add_option("file_b", o.file_b)->required();
  tensor->add_option("-o,--out", o.out);

  auto* factor = app.add_subcommand("factor", "Split a product family into its factors");
  factor->add_option("file", o.file)->required();
  factor->add_option("--dims", o.dims, "N1,N2")->required();
  factor->add_option("--out-a", o.out_a);
  factor->add_option("--out-b", o.out_b);

  auto* search = app.add_subcommand("search", "Randomized search over formula families");
  search->add_option("spec", o.ring)->required();
  search->add_option("--S", o.s_text);
  search->add_option("--N", o.n_text);
  search->add_option("--budget", o.budget);
  search->add_option("--seed", o.seed);
  search->add_flag("--no-known", o.no_known, "Do not place the known trace specs first");
  search->add_option("-o,--out", o.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*exp) return cmd_export(o, out);
    if (*bound) return cmd_bound(o, out);
    if (*ring) return cmd_ring(o, out);
    if (*tensor) return cmd_tensor(o, out);
    if (*factor) return cmd_factor(o, out);
    if (*search) return cmd_search(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "invalid transversal: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PropertyViolation& e) {
    err << "property violation: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace mubkit
