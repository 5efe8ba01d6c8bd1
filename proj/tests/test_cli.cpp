// Copyright 2026 The prmsub Authors
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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct Result {
  std::string out;
  int code = -1;
};

// Runs the installed binary with the given arguments; stderr merged when asked.
Result run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(PRMSUB_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

bool has_line(const std::string& out, const std::string& want) {
  for (const auto& l : lines(out))
    if (l == want) return true;
  return false;
}

}  // namespace

TEST(Cli, HelpExitsZero) {
  Result r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("table"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("params --q 2 --s 2 --d 0").code, 2);
  EXPECT_EQ(run("params --q 2 --s 2 --d 7").code, 2);
  EXPECT_EQ(run("params --q 6 --s 1 --d 2").code, 2);
  EXPECT_EQ(run("params --q 2 --s 2 --d 3 --bogus 1").code, 2);
  EXPECT_EQ(run("export --q 2 --s 2 --d 3 --side middle").code, 2);
  Result r = run("basis --q 2 --s 2 --m 3 --d 3", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("explicit bases implemented only for m=2"), std::string::npos);
}

TEST(Cli, Params) {
  Result r = run("params --q 2 --s 2 --d 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=21 k=9 k⊥=12 δ≥8 (bound) GV: exceeds\n");
  r = run("params --q 4 --s 2 --d 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n=273 k=9 k⊥=264 δ≥192"), std::string::npos);
  EXPECT_NE(r.out.find("GV: exceeds"), std::string::npos);
  r = run("params --q 2 --s 2 --m 3 --d 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=85 k=16 k⊥=69 δ bound: n/a for m≠2 GV: n/a\n");
}

TEST(Cli, TableBinaryPlane) {
  Result r = run("table --q 2 --s 2");
  ASSERT_EQ(r.code, 0);
  const std::vector<std::string> want = {
      "# F4/F2 m=2 budget=" + std::to_string(1ull << 28),
      "d=1 n=21 k=1 delta=16 (exact) k_perp=20 delta_perp=1 (exact)",
      "d=2 n=21 k=2 delta=12 (exact) k_perp=19 delta_perp=1 (exact)",
      "d=3 n=21 k=9 delta=8 (exact) k_perp=12 delta_perp=5 (exact)",
      "d=4 n=21 k=11 delta=4 (exact) k_perp=10 delta_perp=2 (exact)",
      "d=5 n=21 k=16 delta=3 (exact) k_perp=5 delta_perp=8 (exact)",
      "d=6 n=21 k=20 delta=2 (exact) k_perp=1 delta_perp=21 (exact)"};
  EXPECT_EQ(lines(r.out), want);
}

TEST(Cli, TableOtherFields) {
  Result r = run("table --q 3 --s 2 --dmin 4 --dmax 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "d=4 n=91 k=9 delta=54 (exact) k_perp=82 delta_perp=4 (exact)")) << r.out;
  r = run("table --q 2 --s 2 --m 3 --dmin 8 --dmax 8");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "d=8 n=85 k=78 delta=3 (exact) k_perp=7 delta_perp=32 (exact)")) << r.out;
}

TEST(Cli, BudgetTurnsExactIntoBound) {
  Result r = run("table --q 2 --s 2 --dmin 3 --dmax 3 --budget 16");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "d=3 n=21 k=9 delta=>=8 (bound) k_perp=12 delta_perp=>=3 (bound)")) << r.out;
  // the column test still settles distance 2 exactly
  r = run("table --q 2 --s 2 --dmin 4 --dmax 4 --budget 16");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "d=4 n=21 k=11 delta=>=4 (bound) k_perp=10 delta_perp=2 (exact)")) << r.out;
}

TEST(Cli, JsonAgreesWithText) {
  Result t = run("table --q 2 --s 3 --dmin 10 --dmax 14");
  Result j = run("table --q 2 --s 3 --dmin 10 --dmax 14 --json");
  ASSERT_EQ(t.code, 0);
  ASSERT_EQ(j.code, 0);
  auto tl = lines(t.out);
  auto jl = lines(j.out);
  ASSERT_EQ(tl.size(), jl.size() + 1);
  for (size_t i = 0; i < jl.size(); ++i) {
    auto o = nlohmann::json::parse(jl[i]);
    std::string d = o["delta_method"] == "exact" ? std::to_string(o["delta"].get<int>())
                                                  : ">=" + std::to_string(o["delta"].get<int>());
    std::string dp = o["delta_perp_method"] == "exact" ? std::to_string(o["delta_perp"].get<int>())
                                                        : ">=" + std::to_string(o["delta_perp"].get<int>());
    std::ostringstream want;
    want << "d=" << o["d"] << " n=" << o["n"] << " k=" << o["k"] << " delta=" << d << " ("
         << o["delta_method"].get<std::string>() << ") k_perp=" << o["k_perp"] << " delta_perp=" << dp << " ("
         << o["delta_perp_method"].get<std::string>() << ")";
    EXPECT_EQ(tl[i + 1], want.str());
  }
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
  Result a = run("table --q 2 --s 3 --dmin 11 --dmax 14 --threads 1");
  Result b = run("table --q 2 --s 3 --dmin 11 --dmax 14 --threads 4");
  Result c = run("table --q 2 --s 3 --dmin 11 --dmax 14 --threads 4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
  EXPECT_EQ(run("basis --q 2 --s 2 --d 4 --side dual").out, run("basis --q 2 --s 2 --d 4 --side dual").out);
}

TEST(Cli, PrimaryBasisCounts) {
  Result r = run("basis --q 2 --s 4 --d 21");
  ASSERT_EQ(r.code, 0);
  std::vector<std::string> heads;
  for (const auto& l : lines(r.out))
    if (!l.empty() && l[0] == 'B') heads.push_back(l.substr(0, l.find(" :")));
  EXPECT_EQ(heads, (std::vector<std::string>{"B1 127", "B2 5", "B3 1"}));
  EXPECT_TRUE(has_line(r.out, "total 133"));
}

TEST(Cli, DualBasis) {
  Result r = run("basis --q 2 --s 2 --d 4 --side dual");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "total 10")) << r.out;
  auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 2u);
  EXPECT_EQ(ls[1].rfind("D1 7 :", 0), 0u);

  r = run("basis --q 2 --s 2 --d 3 --side dual");
  ASSERT_EQ(r.code, 0);
  ls = lines(r.out);
  bool found = false;
  for (size_t i = 0; i + 1 < ls.size(); ++i)
    if (ls[i].rfind("D4 1 :", 0) == 0 && ls[i + 1] == "  1") found = true;
  EXPECT_TRUE(found) << r.out;
}

TEST(Cli, Verify) {
  Result r = run("verify --q 2 --s 2 --dall");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run("verify --q 2 --s 2 --m 3 --d 4 --samples 200").code, 0);
  EXPECT_EQ(run("verify --q 2 --s 2 --d 3 --dall").code, 2);
}

TEST(Cli, Export) {
  Result r = run("export --q 2 --s 2 --d 3");
  ASSERT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 10u);
  EXPECT_EQ(ls[0], "q=2 s=2 n=21 k=9 modulus=1,1,1");
  for (size_t i = 1; i < ls.size(); ++i) {
    std::istringstream is(ls[i]);
    std::vector<int> v;
    for (int x; is >> x;) v.push_back(x);
    ASSERT_EQ(v.size(), 21u);
    for (int x : v) EXPECT_TRUE(x >= 0 && x < 4);
  }
  r = run("export --q 2 --s 2 --d 3 --side dual");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out)[0], "q=2 s=2 n=21 k=12 modulus=1,1,1");

  auto path = std::filesystem::temp_directory_path() / "prmsub_cli_export_test.txt";
  Result f = run("export --q 2 --s 2 --d 3 --out " + path.string());
  ASSERT_EQ(f.code, 0);
  EXPECT_TRUE(f.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run("export --q 2 --s 2 --d 3").out);
  std::filesystem::remove(path);
}
