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

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "mubkit/cli.hpp"
#include "mubkit/family_io.hpp"

namespace mubkit {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("mubkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenWf) {
  const auto r = run({"gen", "wf", "--p", "3", "--n", "1", "-o", path("wf3.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto f = load_family(path("wf3.json"));
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.root_order(), 3u);
}

TEST_F(CliTest, GenKr) {
  ASSERT_EQ(run({"gen", "kr", "--n", "1", "-o", path("kr1.json")}).code, kExitOk);
  const auto f = load_family(path("kr1.json"));
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.root_order(), 4u);
}

TEST_F(CliTest, GenUsageErrors) {
  EXPECT_EQ(run({"gen", "wf", "--p", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "cubic", "--p", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "wf"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "magic"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "kr", "--n", "0"}).code, kExitUsage);
}

TEST_F(CliTest, GenGeneralized) {
  write_text_file(path("specs.json"), R"([{"character": 1, "terms": [[1, 0, 2], [1, 1, 1]]},
                                          {"character": 1, "terms": [[2, 0, 2], [1, 1, 1]]}])");
  const auto r = run({"gen", "generalized", "--ring", "z5", "--specs", path("specs.json"), "-o", path("g.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(load_family(path("g.json")).size(), 3u);
  EXPECT_EQ(run({"verify", path("g.json")}).code, kExitOk);
  EXPECT_EQ(run({"gen", "generalized", "--ring", "z5"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "generalized", "--ring", "z12", "--specs", path("specs.json"), "--S", "0,1,2,3,4,5", "--N", "0,6"}).code,
            kExitUsage);
}

TEST_F(CliTest, VerifyOutcomes) {
  ASSERT_EQ(run({"gen", "wf", "--p", "3", "--n", "1", "-o", path("wf3.json")}).code, kExitOk);
  EXPECT_EQ(run({"verify", path("wf3.json")}).code, kExitOk);

  auto bases = load_family(path("wf3.json")).bases();
  bases.push_back(bases[2]);
  save_family(MubFamily::make(3, bases), path("dup.json"));
  const auto bad = run({"verify", path("dup.json"), "--report", path("report.json")});
  EXPECT_EQ(bad.code, kExitFailed);
  const auto report = nlohmann::json::parse(read_text_file(path("report.json")));
  EXPECT_EQ(report.at("pass"), false);

  write_text_file(path("garbage.json"), "not json");
  EXPECT_EQ(run({"verify", path("garbage.json")}).code, kExitUsage);
  EXPECT_EQ(run({"verify", path("missing.json")}).code, kExitUsage);
  EXPECT_EQ(run({"verify", path("wf3.json"), "--mode", "fuzzy"}).code, kExitUsage);
}

TEST_F(CliTest, ExportAndFloatVerify) {
  ASSERT_EQ(run({"gen", "kr", "--n", "2", "-o", path("kr2.json")}).code, kExitOk);
  ASSERT_EQ(run({"export", path("kr2.json"), "-o", path("kr2f.json")}).code, kExitOk);
  EXPECT_EQ(run({"verify", path("kr2f.json"), "--mode", "float", "--tol", "1e-9"}).code, kExitOk);
  EXPECT_EQ(run({"verify", path("kr2f.json")}).code, kExitUsage);  // exact mode needs an exact file
  EXPECT_EQ(run({"verify", path("kr2.json"), "--mode", "float"}).code, kExitOk);
}

TEST_F(CliTest, Bound) {
  const auto six = run({"bound", "6"});
  EXPECT_EQ(six.code, kExitOk);
  EXPECT_NE(six.out.find("3 (complete set impossible for formula families)"), std::string::npos) << six.out;
  const auto nine = run({"bound", "9"});
  EXPECT_NE(nine.out.find("10 (prime power: complete set constructible)"), std::string::npos) << nine.out;
  EXPECT_EQ(run({"bound", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"bound", "x"}).code, kExitUsage);
}

TEST_F(CliTest, Ring) {
  const auto sylow = run({"ring", "z12", "sylow"});
  EXPECT_EQ(sylow.code, kExitOk);
  EXPECT_NE(sylow.out.find("{0, 3, 6, 9}, {0, 4, 8}"), std::string::npos) << sylow.out;
  EXPECT_NE(sylow.out.find("unities: 9, 4"), std::string::npos) << sylow.out;
  const auto t = run({"ring", "z12", "transversal", "--S", "0,1,4,5,8,9", "--N", "0,6"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_NE(t.out.find("valid"), std::string::npos);
  const auto bad = run({"ring", "z12", "transversal", "--S", "0,1,2,3,4,5", "--N", "0,6"});
  EXPECT_EQ(bad.code, kExitFailed);
  EXPECT_NE(bad.out.find("invalid"), std::string::npos);
  const auto nil = run({"ring", "z6", "nilradical"});
  EXPECT_NE(nil.out.find("nilradical: {0}"), std::string::npos) << nil.out;
  const auto split = run({"ring", "z12", "split"});
  EXPECT_EQ(split.code, kExitOk);
  EXPECT_NE(split.out.find("S1 = {0, 9}"), std::string::npos) << split.out;
  EXPECT_EQ(run({"ring", "q7", "sylow"}).code, kExitUsage);
  EXPECT_EQ(run({"ring", "z12", "explode"}).code, kExitUsage);
}

TEST_F(CliTest, TensorFactorRoundTrip) {
  ASSERT_EQ(run({"gen", "kr", "--n", "1", "-o", path("a.json")}).code, kExitOk);
  ASSERT_EQ(run({"gen", "wf", "--p", "3", "-o", path("b.json")}).code, kExitOk);
  ASSERT_EQ(run({"tensor", path("a.json"), path("b.json"), "-o", path("t.json")}).code, kExitOk);
  EXPECT_EQ(load_family(path("t.json")).size(), 3u);
  EXPECT_EQ(run({"verify", path("t.json")}).code, kExitOk);
  const auto f = run({"factor", path("t.json"), "--dims", "2,3", "--out-a", path("fa.json"), "--out-b", path("fb.json")});
  ASSERT_EQ(f.code, kExitOk) << f.out << f.err;
  EXPECT_EQ(run({"verify", path("fa.json")}).code, kExitOk);
  EXPECT_EQ(run({"verify", path("fb.json")}).code, kExitOk);
  EXPECT_EQ(load_family(path("fa.json")).dim(), 2u);
  EXPECT_EQ(load_family(path("fb.json")).dim(), 3u);
  EXPECT_EQ(run({"factor", path("t.json"), "--dims", "2,2"}).code, kExitUsage);
  EXPECT_EQ(run({"factor", path("t.json"), "--dims", "6"}).code, kExitUsage);
}

TEST_F(CliTest, FactorRejectsEntangledBasis) {
  const Basis ent = Basis::phase(2, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  save_family(MubFamily::make(4, {mub_standard(4), ent}), path("ent.json"));
  const auto r = run({"factor", path("ent.json"), "--dims", "2,2"});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_NE(r.out.find("not a product"), std::string::npos);
}

TEST_F(CliTest, Search) {
  const auto z6 = run({"search", "z6", "--budget", "10000", "--seed", "7"});
  EXPECT_EQ(z6.code, kExitOk);
  EXPECT_NE(z6.out.find("≤ bound 3"), std::string::npos) << z6.out;
  const auto gf3 = run({"search", "gf:3,1", "--budget", "100"});
  EXPECT_NE(gf3.out.find("max mutually unbiased subset: 4"), std::string::npos) << gf3.out;
  EXPECT_NE(gf3.out.find("(complete)"), std::string::npos) << gf3.out;
  const auto zero = run({"search", "z6", "--budget", "0"});
  EXPECT_NE(zero.out.find("max mutually unbiased subset: 1"), std::string::npos) << zero.out;
  ASSERT_EQ(run({"search", "gr4:2", "--budget", "50", "-o", path("best.json")}).code, kExitOk);
  EXPECT_EQ(load_family(path("best.json")).size(), 5u);
}

}  // namespace
}  // namespace mubkit
