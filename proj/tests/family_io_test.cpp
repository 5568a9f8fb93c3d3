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

#include <cstdio>
#include <filesystem>
#include <functional>

#include "json.hpp"
#include "mubkit/errors.hpp"
#include "mubkit/family_io.hpp"

namespace mubkit {
namespace {

using nlohmann::json;

std::string mutate(const std::string& text, const std::function<void(json&)>& edit) {
  json j = json::parse(text);
  edit(j);
  return j.dump();
}

TEST(FamilyIo, ExactRoundTrip) {
  for (const auto& f : {mub_wf_odd(3, 1), mub_kr_even(2), mub_tensor(mub_kr_even(1), mub_wf_odd(3, 1))}) {
    const auto back = family_from_json(family_to_json(f));
    ASSERT_EQ(back.size(), f.size());
    EXPECT_EQ(back.dim(), f.dim());
    EXPECT_EQ(back.provenance(), f.provenance());
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(back[i], f[i].lifted(f.root_order())) << i;
  }
}

TEST(FamilyIo, HeaderFields) {
  const json j = json::parse(family_to_json(mub_wf_odd(3, 1)));
  EXPECT_EQ(j.at("format"), "mubkit-family");
  EXPECT_EQ(j.at("version"), kFamilyFormatVersion);
  EXPECT_EQ(j.at("root_order"), 3);
  EXPECT_EQ(j.at("scale_denominator"), 3);
  EXPECT_EQ(j.at("bases")[0], "standard");
}

TEST(FamilyIo, FloatRoundTripIsBitExact) {
  const FloatFamily f = to_float(mub_tensor(mub_kr_even(1), mub_wf_odd(3, 1)));
  const FloatFamily back = float_family_from_json(float_family_to_json(f));
  ASSERT_EQ(back.bases.size(), f.bases.size());
  for (std::size_t b = 0; b < f.bases.size(); ++b) {
    for (std::size_t v = 0; v < f.dim; ++v) {
      for (std::size_t l = 0; l < f.dim; ++l) {
        EXPECT_EQ(back.bases[b].vectors[v][l].real(), f.bases[b].vectors[v][l].real());
        EXPECT_EQ(back.bases[b].vectors[v][l].imag(), f.bases[b].vectors[v][l].imag());
      }
    }
  }
}

TEST(FamilyIo, DetectKind) {
  EXPECT_EQ(detect_family_kind(family_to_json(mub_kr_even(1))), FamilyFileKind::kExact);
  EXPECT_EQ(detect_family_kind(float_family_to_json(to_float(mub_kr_even(1)))), FamilyFileKind::kFloat);
  EXPECT_THROW(detect_family_kind(R"({"format": "other"})"), FormatError);
}

TEST(FamilyIo, MalformedExactFiles) {
  const std::string good = family_to_json(mub_wf_odd(3, 1));
  EXPECT_THROW(family_from_json("{"), FormatError);
  EXPECT_THROW(family_from_json("[]"), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["format"] = "mubkit-float-family"; })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["version"] = 99; })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j.erase("root_order"); })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["root_order"] = "three"; })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["scale_denominator"] = 9; })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["bases"][1][0][0] = 3; })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["bases"][1][0][0] = -1; })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["bases"][1][0].erase(0); })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["bases"][1].erase(0); })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["bases"][1] = "identity"; })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["bases"][1] = "standard"; })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["bases"] = 4; })), FormatError);
  EXPECT_THROW(family_from_json(mutate(good, [](json& j) { j["dimension"] = 0; })), FormatError);
}

TEST(FamilyIo, MalformedFloatFiles) {
  const std::string good = float_family_to_json(to_float(mub_kr_even(1)));
  EXPECT_THROW(float_family_from_json(mutate(good, [](json& j) { j["bases"][0][0][0][0] = 1.0; })), FormatError);
  EXPECT_THROW(float_family_from_json(mutate(good, [](json& j) { j["bases"][0][0][0][0] = "1.0x"; })), FormatError);
  EXPECT_THROW(float_family_from_json(mutate(good, [](json& j) { j["bases"][0][0][0] = json::array({"1"}); })), FormatError);
  EXPECT_THROW(float_family_from_json(mutate(good, [](json& j) { j["bases"][0].erase(0); })), FormatError);
  EXPECT_THROW(float_family_from_json(mutate(good, [](json& j) { j["format"] = "mubkit-family"; })), FormatError);
}

TEST(FamilyIo, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "mubkit_family_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "kr2.json").string();
  save_family(mub_kr_even(2), path);
  EXPECT_TRUE(verify_family(load_family(path)).all_pass());
  const auto fpath = (dir / "kr2f.json").string();
  save_float_family(to_float(mub_kr_even(2)), fpath);
  EXPECT_TRUE(verify_family(load_float_family(fpath)).all_pass());
  EXPECT_THROW(load_family((dir / "missing.json").string()), FormatError);
  EXPECT_THROW(write_text_file((dir / "no" / "such" / "dir.json").string(), "x"), FormatError);
  std::filesystem::remove_all(dir);
}

TEST(FamilyIo, ReportJson) {
  auto bases = mub_wf_odd(3, 1).bases();
  bases.push_back(bases[1]);
  const json j = json::parse(report_to_json(verify_family(MubFamily::make(3, bases))));
  EXPECT_EQ(j.at("pass"), false);
  EXPECT_EQ(j.at("mode"), "exact");
  EXPECT_FALSE(j.at("witnesses").empty());
  EXPECT_EQ(j.at("witnesses")[0].at("basis_a"), 1);
  EXPECT_EQ(j.at("witnesses")[0].at("basis_b"), 4);
}

TEST(FamilyIo, Specs) {
  const auto r = ring_from_zn(5);
  const auto specs = specs_from_json(r, R"([{"character": 1, "terms": [[1, 0, 2], [1, 1, 1]], "constant": 0, "label": "r=1"},
                                            {"character": 0}])");
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[0].character, CharacterGroup(r).character(1));
  EXPECT_EQ(specs[0].terms.size(), 2u);
  EXPECT_EQ(specs[0].label, "r=1");
  EXPECT_TRUE(specs[1].terms.empty());
  EXPECT_THROW(specs_from_json(r, R"([{"character": 5}])"), FormatError);
  EXPECT_THROW(specs_from_json(r, R"([{"character": 1, "terms": [[5, 1, 1]]}])"), FormatError);
  EXPECT_THROW(specs_from_json(r, R"([{"character": 1, "terms": [[1, -1, 1]]}])"), FormatError);
  EXPECT_THROW(specs_from_json(r, R"({"character": 1})"), FormatError);
  EXPECT_THROW(specs_from_json(r, R"([{"terms": []}])"), FormatError);
}

}  // namespace
}  // namespace mubkit
