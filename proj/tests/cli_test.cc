// Copyright 2026 The Ore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ore/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "ore/serialize.h"

namespace ore {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = RunCli(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ore_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    unsetenv("TOOL_POLICY_MAX_Q");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("TOOL_POLICY_MAX_Q");
  }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  static std::string Slurp(const std::string& path) {
    std::ifstream f(path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

TEST_F(CliTest, DecomposeMultipliesBack) {
  const std::string field = Write("f.json", R"({"p": 2, "e": 4})");
  const Field f = Field::Create(2, 4);
  Rng rng(1);
  for (int i = 0; i < 5; ++i) {
    LinPoly l = LinPoly::Random(f, 1, 4, rng);
    if (l.Lead().value == 0 || l.IsZero()) continue;
    const std::string poly = Write("l.json", ToJson(l).dump());
    const Result r = Invoke({"decompose", "--field", field, "--poly", poly, "--seed", "7"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = ParseJson(r.out);
    LinPoly product = LinPoly::Identity(f);
    int total = 0;
    for (const auto& fac : j.at("factors")) product = Compose(product, LinPolyFromJson(fac, f));
    for (const auto& d : j.at("skew_degrees")) total += d.get<int>();
    EXPECT_EQ(product, l);
    EXPECT_EQ(total, l.TopIndex());
    EXPECT_TRUE(j.at("composition_matches").get<bool>());
  }
}

TEST_F(CliTest, ProbeFraction) {
  const std::string field = Write("f.json", R"({"p": 2, "e": 4})");
  const Result r =
      Invoke({"probe", "--field", field, "--degree", "4", "--trials", "200", "--seed", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const SplitStats st = SplitStatsFromJson(ParseJson(r.out));
  EXPECT_EQ(st.trials, 200);
  EXPECT_GE(st.FirstTryFraction(), 1.0 / 9);
}

TEST_F(CliTest, UsageErrors) {
  Result r = Invoke({"decompose"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--field"), std::string::npos);
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"field", "--field", (dir_ / "missing.json").string()}).code, kExitUsage);
  const std::string bad = Write("bad.json", "{\"p\": 2,, \"e\": 4}");
  r = Invoke({"field", "--field", bad});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, DomainErrors) {
  const std::string reducible = Write("r.json", R"({"p": 2, "e": 2, "modulus": [1, 0, 1]})");
  Result r = Invoke({"field", "--field", reducible});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("ReducibleModulus"), std::string::npos) << r.err;

  const std::string big = Write("big.json", R"({"p": 2, "e": 17})");
  r = Invoke({"attack", "--field", big, "--instances", "1"});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("PolicyBound"), std::string::npos) << r.err;

  setenv("TOOL_POLICY_MAX_Q", "131072", 1);
  r = Invoke({"field", "--field", big});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ParseJson(r.out).at("q").get<uint64_t>(), 131072u);
}

TEST_F(CliTest, HfeLifecycle) {
  const std::string field = Write("f.json", R"({"p": 2, "e": 6})");
  const Result kg = Invoke({"keygen", "--field", field, "--bound", "16", "--seed", "5"});
  ASSERT_EQ(kg.code, kExitOk) << kg.err;
  const std::string key = Write("k.json", kg.out);
  const Field f = Field::Create(2, 6);
  Json ms = Json::array();
  for (FqElem m : f.Elements()) ms.push_back(ToJson(f, m));
  const Result enc = Invoke({"encrypt", "--key", key}, ms.dump());
  ASSERT_EQ(enc.code, kExitOk) << enc.err;
  const Result dec = Invoke({"decrypt", "--key", key}, enc.out);
  ASSERT_EQ(dec.code, kExitOk) << dec.err;
  const Json cands = ParseJson(dec.out);
  ASSERT_EQ(cands.size(), f.q());
  for (size_t i = 0; i < f.q(); ++i) {
    bool found = false;
    for (const auto& c : cands[i]) found |= c == ms[i];
    EXPECT_TRUE(found) << i;
  }
  // Single element in, single element out.
  const Result one = Invoke({"encrypt", "--key", key}, "[1, 0, 0, 0, 0, 0]");
  ASSERT_EQ(one.code, kExitOk);
  EXPECT_EQ(ParseJson(one.out), ParseJson(enc.out)[1]);
}

TEST_F(CliTest, AttackOnKey) {
  const std::string field = Write("f.json", R"({"p": 2, "e": 8})");
  const Result kg = Invoke({"keygen", "--field", field, "--bound", "16", "--seed", "3"});
  ASSERT_EQ(kg.code, kExitOk);
  const std::string key = Write("k.json", kg.out);
  const Result r = Invoke({"attack", "--key", key, "--bound", "16", "--max-rounds", "2"});
  const Json j = ParseJson(r.out);
  if (j.at("outcome") == "success") {
    EXPECT_EQ(r.code, kExitOk);
  } else {
    EXPECT_EQ(r.code, kExitDomainError);
    EXPECT_NE(r.err.find("AttackFailed"), std::string::npos);
    EXPECT_LE(j.at("rounds").get<int>(), 2);
  }
}

TEST_F(CliTest, ScenarioReport) {
  const std::string field = Write("f.json", R"({"p": 2, "e": 8})");
  Result r = Invoke({"attack", "--field", field, "--instances", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(ParseJson(r.out).at("instances").empty());

  const std::vector<std::string> args = {"attack", "--field", field, "--instances", "20",
                                         "--bound", "16", "--seed", "3"};
  r = Invoke(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = ParseJson(r.out);
  ASSERT_EQ(j.at("instances").size(), 20u);
  int successes = 0;
  for (const auto& inst : j.at("instances")) {
    ASSERT_NE(inst.at("outcome"), "error") << inst.dump();
    if (inst.at("outcome") == "success") {
      ++successes;
      EXPECT_TRUE(inst.at("decrypt_ok").get<bool>());
    } else {
      EXPECT_EQ(inst.at("rounds").get<int>(), kDefaultMaxRounds);
    }
  }
  EXPECT_EQ(j.at("successes").get<int>(), successes);
  EXPECT_DOUBLE_EQ(j.at("success_rate").get<double>(), successes / 20.0);
  EXPECT_EQ(Invoke(args).out, r.out);
}

TEST_F(CliTest, DeterministicAndInputsUntouched) {
  const std::string field = Write("f.json", R"({"p": 3, "e": 2})");
  const std::string a = Write("a.json", R"({"coeffs": [[1, 0], [0, 1], [2, 2], [1, 0]]})");
  const std::string b = Write("b.json", R"({"coeffs": [[0, 1], [1, 0]]})");
  const std::string before = Slurp(field) + Slurp(a) + Slurp(b);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"decompose", "--field", field, "--poly", a, "--seed", "9"},
           {"gcldf", "--field", field, "--poly", a, "--poly", b},
           {"keygen", "--field", field, "--seed", "2"},
           {"probe", "--field", field, "--degree", "3", "--trials", "30", "--seed", "4"}}) {
    const Result r1 = Invoke(args);
    const Result r2 = Invoke(args);
    EXPECT_EQ(r1.code, kExitOk) << r1.err;
    EXPECT_EQ(r1.out, r2.out);
    EXPECT_FALSE(r1.out.empty());
  }
  EXPECT_EQ(Slurp(field) + Slurp(a) + Slurp(b), before);
}

}  // namespace
}  // namespace ore
