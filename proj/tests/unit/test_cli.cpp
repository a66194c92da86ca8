// Copyright 2026 The qpair Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "qpair/io.hpp"

namespace qpair {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Invocation {
  int code;
  std::string text;
  json parsed() const { return json::parse(text); }
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out;
  const int code = cli::run(args, out);
  return {code, out.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qpair_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

TEST_F(Cli, RandomBellClassifiesAsEntangledPure) {
  const Invocation gen = run({"random", "--family", "bell", "--seed", "7", "--output", path("bell.json")});
  ASSERT_EQ(gen.code, cli::kExitOk) << gen.text;
  const Invocation r = run({"classify", path("bell.json")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.text;
  const json j = r.parsed();
  EXPECT_EQ(j["command"], "classify");
  EXPECT_EQ(j["tool"]["name"], "qpair");
  EXPECT_TRUE(j["result"]["entangled"].get<bool>());
  EXPECT_FALSE(j["result"]["separable"]["decision"].get<bool>());
  EXPECT_EQ(j["result"]["purity"]["rank"], 1);
  EXPECT_EQ(j["result"]["family"]["name"], "bell");
  EXPECT_EQ(j["input"]["metadata"]["seed"], "7");
}

TEST_F(Cli, CheckExitCodes) {
  ASSERT_EQ(run({"random", "--family", "werner_first", "--params=-1,0.8,0.5,0.2", "--output",
                 path("bad.json")})
                .code,
            cli::kExitError);  // construction refuses the invalid state
  const std::string bad = write(
      "bad.json",
      R"({"format":"qpair-state/1","s":[0,0,0],"t":[0,0,0],"C":[[-0.8,0,0],[0,-0.5,0],[0,0,-0.2]]})");
  const Invocation r = run({"check", bad});
  EXPECT_EQ(r.code, cli::kExitInvalid);
  const json j = r.parsed();
  EXPECT_FALSE(j["result"]["valid"].get<bool>());
  EXPECT_NEAR(j["result"]["verdict"]["margins"]["min_eigenvalue"].get<double>(), -0.025, 1e-12);

  ASSERT_EQ(run({"random", "--seed", "3", "--output", path("ok.json")}).code, cli::kExitOk);
  EXPECT_EQ(run({"check", path("ok.json")}).code, cli::kExitOk);
}

TEST_F(Cli, DegreeOfWerner) {
  ASSERT_EQ(run({"random", "--family", "werner", "--params", "0.5", "--output", path("w.json")}).code,
            cli::kExitOk);
  const Invocation r = run({"degree", path("w.json"), "--pretty"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.text;
  const json j = r.parsed();
  EXPECT_NEAR(j["result"]["S"].get<double>(), 0.75, 1e-12);
  EXPECT_EQ(j["result"]["method"], "ClosedFormWernerFirst");
  EXPECT_FALSE(j["result"]["lower_bound"].get<bool>());
}

TEST_F(Cli, ErrorsAreObjects) {
  Invocation r = run({"classify", path("missing.json")});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_EQ(r.parsed()["error"]["kind"], "argument");

  const std::string bad = write("fmt.json", R"({"format":"other","s":[0,0,0]})");
  r = run({"invariants", bad});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_EQ(r.parsed()["error"]["kind"], "parse");
  EXPECT_EQ(r.parsed()["error"]["location"], "/format");
  EXPECT_EQ(r.parsed()["error"]["reason"], "unknown_format");

  r = run({"degree", "--restarts", "0", bad});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_EQ(r.parsed()["error"]["kind"], "usage");

  r = run({"random", "--family", "nope"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_EQ(r.parsed()["error"]["kind"], "argument");

  r = run({});
  EXPECT_EQ(r.code, cli::kExitError);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  ASSERT_EQ(run({"random", "--seed", "11", "--output", path("s.json")}).code, cli::kExitOk);
  for (const char* cmd : {"invariants", "classify", "canonical", "expectations"}) {
    const Invocation a = run({cmd, path("s.json")});
    const Invocation b = run({cmd, path("s.json")});
    EXPECT_EQ(a.code, cli::kExitOk) << a.text;
    EXPECT_EQ(a.text, b.text) << cmd;
  }
  const Invocation a = run({"decompose", path("s.json"), "--seed", "4", "--restarts", "3"});
  const Invocation b = run({"decompose", path("s.json"), "--seed", "4", "--restarts", "3"});
  EXPECT_EQ(a.code, cli::kExitOk) << a.text;
  EXPECT_EQ(a.text, b.text);
}

TEST_F(Cli, OutputFileMatchesStandardOutput) {
  ASSERT_EQ(run({"random", "--seed", "5", "--rank", "2", "--output", path("r2.json")}).code,
            cli::kExitOk);
  const Invocation direct = run({"canonical", path("r2.json")});
  ASSERT_EQ(run({"canonical", path("r2.json"), "--output", path("out.json")}).code, cli::kExitOk);
  std::ifstream in(path("out.json"), std::ios::binary);
  const std::string stored((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(stored, direct.text);
  EXPECT_TRUE(direct.parsed()["result"].contains("rank2"));
}

TEST_F(Cli, RandomStateFilesParse) {
  const Invocation r = run({"random", "--seed", "9", "--rank", "1"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const StateFile f = parse_state_file(r.text);
  EXPECT_EQ(f.metadata.at("rank"), "1");
  EXPECT_EQ(f.state, random_state(9, 1));
}

TEST_F(Cli, HelpAndVersion) {
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
  const Invocation v = run({"--version"});
  EXPECT_EQ(v.code, cli::kExitOk);
  EXPECT_FALSE(v.text.empty());
}

}  // namespace
}  // namespace qpair
