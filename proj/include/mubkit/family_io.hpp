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

// JSON interchange formats.
//
// Exact family:
//   {"format": "mubkit-family", "version": 1, "dimension": N, "root_order": m,
//    "scale_denominator": N, "provenance": "...",
//    "bases": ["standard", [[e_00, e_01, ...], ...], ...]}
// Entry l of vector k of a phase basis is zeta_m^{e_kl} / sqrt(N). Every phase
// basis is written at the family root order m.
//
// Float family:
//   {"format": "mubkit-float-family", "version": 1, "dimension": N,
//    "provenance": "...", "bases": [[[["re", "im"], ...], ...], ...]}
// with decimal strings carrying 17 significant digits.
//
// Formula specs (input to the generalized generator):
//   [{"character": index, "terms": [[coeff, k_degree, l_degree], ...],
//     "constant": c, "label": "..."}, ...]

#ifndef MUBKIT_FAMILY_IO_HPP_
#define MUBKIT_FAMILY_IO_HPP_

#include <string>
#include <vector>

#include "mubkit/mub.hpp"
#include "mubkit/ring.hpp"
#include "mubkit/verify.hpp"

namespace mubkit {

inline constexpr int kFamilyFormatVersion = 1;

enum class FamilyFileKind { kExact, kFloat };

// All readers throw FormatError on malformed input.
std::string family_to_json(const MubFamily& f);
MubFamily family_from_json(const std::string& text);
std::string float_family_to_json(const FloatFamily& f);
FloatFamily float_family_from_json(const std::string& text);
FamilyFileKind detect_family_kind(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

void save_family(const MubFamily& f, const std::string& path);
MubFamily load_family(const std::string& path);
void save_float_family(const FloatFamily& f, const std::string& path);
FloatFamily load_float_family(const std::string& path);

std::string report_to_json(const VerificationReport& rep);

/// Character indices refer to CharacterGroup(r) enumeration order.
std::vector<FormulaSpec> specs_from_json(const FiniteRing& r, const std::string& text);

}  // namespace mubkit

#endif  // MUBKIT_FAMILY_IO_HPP_
