// Copyright 2026 The entaudit Authors
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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace entaudit::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("entaudit_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

const char* kBell =
    R"({"kind":"pure","d1":2,"d2":2,"amplitudes":[[0.7071067811865476,0],[0,0],[0,0],[0.7071067811865476,0]]})";

TEST_F(CliTest, ComputeBellEntropy) {
  const auto r = invoke({"compute", "--measure", "svn", "--state", write("bell.json", kBell)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.6931471806\nschmidt coefficients: 0.5 0.5\n");
}

TEST_F(CliTest, ComputeInBitsAndOnMixedStates) {
  auto r = invoke({"compute", "--measure", "svn", "--state", write("bell.json", kBell), "--base", "bit"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 2), "1\n");
  r = invoke({"gen", "--d1", "2", "--d2", "2", "--kind", "separable", "--seed", "3", "--out", path("sep.json")});
  ASSERT_EQ(r.code, 0);
  r = invoke({"compute", "--measure", "svn-scaled:2", "--state", path("sep.json")});
  EXPECT_EQ(r.code, 0);
  r = invoke({"compute", "--measure", "gamma", "--state", path("sep.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("measure"), std::string::npos);
}

TEST_F(CliTest, DemoP4ViolationExitsOne) {
  const auto r = invoke({"demo", "p4-violation", "--out", path("demo.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("2.772588722"), std::string::npos);
  const auto doc = nlohmann::json::parse(slurp(path("demo.json")));
  EXPECT_EQ(doc.at("reports").at(0).at("axiom"), "P4");
}

TEST_F(CliTest, AuditSvnPassesPureStatePostulates) {
  const auto r = invoke({"audit", "--measure", "svn", "--axioms", "P2,P3,P4", "--samples", "200", "--seed", "42",
                         "--out", path("report.json")});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(slurp(path("report.json")));
  ASSERT_EQ(doc.at("reports").size(), 3u);
  for (const auto& rep : doc.at("reports")) EXPECT_TRUE(rep.at("passed").get<bool>());
  EXPECT_EQ(doc.at("summary").at("passed"), 3);
}

TEST_F(CliTest, AuditReportsAreByteIdentical) {
  const std::vector<std::string> base{"audit", "--measure", "svn", "--axioms", "P2,P3,P4",
                                      "--samples", "50", "--seed", "42", "--out"};
  auto a = base, b = base;
  a.push_back(path("a.json"));
  b.push_back(path("b.json"));
  ASSERT_EQ(invoke(a).code, 0);
  ASSERT_EQ(invoke(b).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(CliTest, FailingAuditWitnessCanBeRecomputed) {
  auto r = invoke({"audit", "--measure", "gamma", "--axioms", "P2,P4", "--samples", "30", "--out", path("g.json")});
  ASSERT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(slurp(path("g.json")));
  const double reported = doc.at("reports").at(1).at("worst_violation").get<double>();
  r = invoke({"compute", "--measure", "gamma", "--state", path("g.json")});
  EXPECT_EQ(r.code, 0);
  char expected[64];
  std::snprintf(expected, sizeof expected, "P4 witness violation: %.10g\n", reported);
  EXPECT_EQ(r.out, expected);
  // The witness is a state document in its own right.
  std::ofstream(path("w.json")) << doc.at("reports").at(1).at("witness").dump();
  EXPECT_EQ(invoke({"compute", "--measure", "gamma", "--state", path("w.json")}).code, 0);
}

TEST_F(CliTest, ConfigErrorsExitTwoNamingTheField) {
  const auto bell = write("bell.json", kBell);
  struct Case {
    std::vector<std::string> args;
    std::string field;
  };
  const std::vector<Case> cases{
      {{"audit", "--measure", "nope", "--axioms", "P2"}, "measure"},
      {{"audit", "--measure", "svn", "--axioms", "P2,Q7"}, "axioms"},
      {{"audit", "--measure", "svn", "--axioms", "P2", "--samples", "0"}, "samples"},
      {{"audit", "--measure", "svn", "--axioms", "P2", "--tol", "0"}, "tol"},
      {{"compute", "--measure", "svn", "--state", bell, "--base", "dec"}, "base"},
      {{"compute", "--measure", "svn", "--state", path("missing.json")}, "state"},
      {{"compute", "--measure", "svn", "--state", write("bad.json", "{not json")}, "state"},
      {{"compute", "--measure", "svn", "--state",
        write("short.json", R"({"kind":"pure","d1":2,"d2":3,"amplitudes":[[1,0]]})")},
       "amplitudes"},
      {{"demo", "p9-violation"}, "demo"},
      {{"gen", "--d1", "0", "--d2", "2", "--out", path("x.json")}, "d1"},
      {{"gen", "--d1", "2", "--d2", "2", "--kind", "weird", "--out", path("x.json")}, "kind"},
  };
  for (const auto& c : cases) {
    const auto r = invoke(c.args);
    EXPECT_EQ(r.code, 2) << c.field;
    EXPECT_NE(r.err.find(c.field + ":"), std::string::npos) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  }
}

TEST_F(CliTest, UnknownNamesAreRejectedBeforeComputation) {
  const auto r = invoke({"audit", "--measure", "svn", "--axioms", "P2,P3,NOPE", "--out", path("never.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(path("never.json")));
}

TEST_F(CliTest, GenWritesValidStates) {
  ASSERT_EQ(invoke({"gen", "--d1", "3", "--d2", "2", "--seed", "9", "--out", path("p.json")}).code, 0);
  const auto r = invoke({"compute", "--measure", "gamma", "--state", path("p.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("schmidt coefficients:"), std::string::npos);
  ASSERT_EQ(invoke({"gen", "--d1", "3", "--d2", "2", "--seed", "9", "--out", path("q.json")}).code, 0);
  EXPECT_EQ(slurp(path("p.json")), slurp(path("q.json")));
}

TEST_F(CliTest, ParseErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"audit", "--measure", "svn"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

}  // namespace
}  // namespace entaudit::cli
