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

#include "mubkit/family_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mubkit/errors.hpp"

namespace mubkit {

using nlohmann::json;

namespace {

constexpr const char* kExactFormat = "mubkit-family";
constexpr const char* kFloatFormat = "mubkit-float-family";

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("family file: not valid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("family file: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("family file: field '") + key + "' has the wrong type");
  }
}

void check_header(const json& j, const char* format) {
  const auto f = field<std::string>(j, "format");
  if (f != format) throw FormatError("family file: format is '" + f + "', expected '" + format + "'");
  const auto v = field<int>(j, "version");
  if (v != kFamilyFormatVersion) throw FormatError("family file: unsupported version " + std::to_string(v));
}

std::string format17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const json& j) {
  if (!j.is_string()) throw FormatError("float family: components must be decimal strings");
  const auto s = j.get<std::string>();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw FormatError("float family: '" + s + "' is not a number");
  }
  if (pos != s.size()) throw FormatError("float family: '" + s + "' is not a number");
  return v;
}

}  // namespace

std::string family_to_json(const MubFamily& f) {
  const std::uint32_t m = f.root_order();
  json bases = json::array();
  for (const auto& b : f.bases()) {
    if (b.is_standard()) {
      bases.push_back("standard");
    } else {
      bases.push_back(b.lifted(m).exponents());
    }
  }
  json j = {{"format", kExactFormat},
            {"version", kFamilyFormatVersion},
            {"dimension", f.dim()},
            {"root_order", m},
            {"scale_denominator", f.dim()},
            {"provenance", f.provenance()},
            {"bases", std::move(bases)}};
  return j.dump(1) + "\n";
}

MubFamily family_from_json(const std::string& text) {
  const json j = parse(text);
  check_header(j, kExactFormat);
  const auto n = field<std::size_t>(j, "dimension");
  const auto m = field<std::uint32_t>(j, "root_order");
  const auto scale = field<std::size_t>(j, "scale_denominator");
  const auto provenance = j.contains("provenance") ? field<std::string>(j, "provenance") : std::string();
  if (n == 0) throw FormatError("family file: dimension must be >= 1");
  if (m == 0) throw FormatError("family file: root order must be >= 1");
  if (scale != n) throw FormatError("family file: scale denominator must equal the dimension");
  const json& bases = j.at("bases");
  if (!bases.is_array()) throw FormatError("family file: 'bases' must be an array");

  std::vector<Basis> out;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const json& b = bases[i];
    const std::string where = "family file: basis " + std::to_string(i);
    if (b.is_string()) {
      if (b.get<std::string>() != "standard") throw FormatError(where + ": unknown token '" + b.get<std::string>() + "'");
      out.push_back(Basis::standard(n, "basis " + std::to_string(i)));
      continue;
    }
    if (!b.is_array() || b.size() != n) throw FormatError(where + ": expected " + std::to_string(n) + " vectors");
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& row : b) {
      if (!row.is_array() || row.size() != n) throw FormatError(where + ": expected " + std::to_string(n) + " exponents per vector");
      std::vector<std::uint32_t> r;
      for (const auto& e : row) {
        if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= m) {
          throw FormatError(where + ": exponents must be integers in [0, " + std::to_string(m) + ")");
        }
        r.push_back(e.get<std::uint32_t>());
      }
      rows.push_back(std::move(r));
    }
    out.push_back(Basis::phase(m, std::move(rows), "basis " + std::to_string(i)));
  }
  try {
    return MubFamily::make(n, std::move(out), provenance);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("family file: ") + e.what());
  }
}

std::string float_family_to_json(const FloatFamily& f) {
  json bases = json::array();
  for (const auto& b : f.bases) {
    json vecs = json::array();
    for (const auto& v : b.vectors) {
      json comps = json::array();
      for (const auto& z : v) comps.push_back({format17(z.real()), format17(z.imag())});
      vecs.push_back(std::move(comps));
    }
    bases.push_back(std::move(vecs));
  }
  json j = {{"format", kFloatFormat},
            {"version", kFamilyFormatVersion},
            {"dimension", f.dim},
            {"provenance", f.provenance},
            {"bases", std::move(bases)}};
  return j.dump(1) + "\n";
}

FloatFamily float_family_from_json(const std::string& text) {
  const json j = parse(text);
  check_header(j, kFloatFormat);
  FloatFamily f;
  f.dim = field<std::size_t>(j, "dimension");
  if (f.dim == 0) throw FormatError("float family: dimension must be >= 1");
  if (j.contains("provenance")) f.provenance = field<std::string>(j, "provenance");
  const json& bases = j.at("bases");
  if (!bases.is_array()) throw FormatError("float family: 'bases' must be an array");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const json& b = bases[i];
    const std::string where = "float family: basis " + std::to_string(i);
    if (!b.is_array() || b.size() != f.dim) throw FormatError(where + ": expected " + std::to_string(f.dim) + " vectors");
    FloatBasis fb;
    for (const auto& v : b) {
      if (!v.is_array() || v.size() != f.dim) throw FormatError(where + ": wrong vector length");
      FloatVector vec;
      for (const auto& z : v) {
        if (!z.is_array() || z.size() != 2) throw FormatError(where + ": components must be [re, im] pairs");
        vec.emplace_back(parse_double(z[0]), parse_double(z[1]));
      }
      fb.vectors.push_back(std::move(vec));
    }
    f.bases.push_back(std::move(fb));
  }
  return f;
}

FamilyFileKind detect_family_kind(const std::string& text) {
  const json j = parse(text);
  const auto f = field<std::string>(j, "format");
  if (f == kExactFormat) return FamilyFileKind::kExact;
  if (f == kFloatFormat) return FamilyFileKind::kFloat;
  throw FormatError("family file: unknown format '" + f + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
  if (!out) throw FormatError("write to '" + path + "' failed");
}

void save_family(const MubFamily& f, const std::string& path) { write_text_file(path, family_to_json(f)); }
MubFamily load_family(const std::string& path) { return family_from_json(read_text_file(path)); }
void save_float_family(const FloatFamily& f, const std::string& path) { write_text_file(path, float_family_to_json(f)); }
FloatFamily load_float_family(const std::string& path) { return float_family_from_json(read_text_file(path)); }

std::string report_to_json(const VerificationReport& rep) {
  json witnesses = json::array();
  for (const auto& w : rep.witnesses) {
    witnesses.push_back({{"basis_a", w.basis_a},
                         {"basis_b", w.basis_b},
                         {"vector_a", w.vector_a},
                         {"vector_b", w.vector_b},
                         {"value", w.value}});
  }
  json j = {{"dimension", rep.dim},
            {"mode", rep.mode == VerifyMode::kExact ? "exact" : "float"},
            {"tolerance", rep.tolerance},
            {"orthonormal", rep.orthonormal},
            {"unbiased", rep.unbiased},
            {"witnesses", std::move(witnesses)},
            {"pass", rep.all_pass()}};
  return j.dump(1) + "\n";
}

std::vector<FormulaSpec> specs_from_json(const FiniteRing& r, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("specs: not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw FormatError("specs: expected an array of spec objects");
  const CharacterGroup chars(r);
  std::vector<FormulaSpec> specs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& s = j[i];
    const std::string where = "specs: entry " + std::to_string(i);
    const auto chi = field<std::uint64_t>(s, "character");
    if (chi >= chars.size()) throw FormatError(where + ": character index out of range");
    FormulaSpec spec;
    spec.character = chars.character(chi);
    spec.constant = s.contains("constant") ? field<ElementId>(s, "constant") : r.zero();
    if (spec.constant >= r.order()) throw FormatError(where + ": constant out of range");
    spec.label = s.contains("label") ? field<std::string>(s, "label") : "spec " + std::to_string(i);
    if (s.contains("terms")) {
      const json& terms = s.at("terms");
      if (!terms.is_array()) throw FormatError(where + ": 'terms' must be an array");
      for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
            !t[2].is_number_unsigned()) {
          throw FormatError(where + ": terms are [coeff, k_degree, l_degree] triples of non-negative integers");
        }
        Monomial mono{t[0].get<ElementId>(), t[1].get<unsigned>(), t[2].get<unsigned>()};
        if (mono.coeff >= r.order()) throw FormatError(where + ": coefficient out of range");
        spec.terms.push_back(mono);
      }
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace mubkit
