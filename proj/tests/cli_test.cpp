// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mtk/cli.hpp"

namespace mtk {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "mtk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("mtk_cli_test_" + name)).string();
}

TEST(Cli, GenThenInvariants) {
  std::string path = tmp("t3.json");
  ASSERT_EQ(run({"gen", "T_k", "--param", "q=2", "-o", path}).code, 0);
  Outcome r = run({"invariants", path, "--what", "matroidal,hyper"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["matroidal"]["nu"], "1");
  EXPECT_EQ(j["matroidal"]["tau"], "2");
  EXPECT_EQ(j["hyper"]["nu_star"], "2");
  Outcome ratio = run({"ratio", path, "--pair", "R:P"});
  EXPECT_EQ(ratio.code, 0);
  EXPECT_EQ(nlohmann::json::parse(ratio.out)["ratio"], "2");
}

TEST(Cli, VerifyExitCodes) {
  Outcome ok = run({"verify", "sharpness"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("\"verdict\":\"holds\""), std::string::npos);
  EXPECT_EQ(run({"verify", "nosuch"}).code, 2);
  Outcome table = run({"verify", "pq-witness", "--report", "table"});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("0 violated"), std::string::npos);
}

TEST(Cli, VerifyOutputIsDeterministic) {
  auto a = run({"verify", "williams", "--seed", "3", "--count", "15"});
  auto b = run({"verify", "williams", "--seed", "3", "--count", "15"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"ratio", "x.json", "--pair", "P:R"}).code, 2);
  EXPECT_EQ(run({"invariants", "/nonexistent.json"}).code, 2);
  std::string bad = tmp("bad.json");
  std::ofstream(bad) << "{\"complex\":";
  EXPECT_EQ(run({"invariants", bad}).code, 2);
  EXPECT_EQ(run({"gen", "nosuch"}).code, 2);
  EXPECT_EQ(run({"gen", "T_k", "--param", "q"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, InapplicableInvariantIsReported) {
  std::string path = tmp("c.json");
  std::ofstream(path) << R"({"complex":{"n":2,"maximal_faces":[[0],[1]]}})";
  Outcome r = run({"invariants", path, "--what", "eta_h,gamma_e"});
  EXPECT_EQ(r.code, 2);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["eta_h"], "1");
  EXPECT_TRUE(j["gamma_e"].contains("error"));
}

}  // namespace
}  // namespace mtk
