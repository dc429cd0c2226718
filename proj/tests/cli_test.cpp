// Copyright 2026 The p1dom Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

namespace p1dom {
namespace {

using namespace p1dom::test;

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "p1dom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(P1DOM_CORPUS_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("p1dom-cli-test-" + name);
}

TEST(Cli, TwistCohomology) {
  auto r = call({"twist-cohomology", "--", "-3", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "dim H^0 = 0")) << r.out;
  EXPECT_TRUE(has(r.out, "dim H^1 = 2")) << r.out;
  auto p = call({"twist-cohomology", "2", "3"});
  EXPECT_EQ(p.code, 0);
  EXPECT_TRUE(has(p.out, "dim H^0 = 9")) << p.out;
  auto rep = call({"--format", "report", "twist-cohomology", "--split=-1", "--", "-3", "1"});
  EXPECT_EQ(rep.code, 0);
  auto j = json::parse(rep.out);
  EXPECT_EQ(j["command"], "twist-cohomology");
  EXPECT_EQ(j["status"], "OK");
  EXPECT_EQ(j["result"]["h1_basis"], json::parse(R"([["1"],["x"]])"));
}

TEST(Cli, VerifyXMinusOne) {
  auto r = call({"verify", corpus("x-minus-1.cplx")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "PASS")) << r.out;
  auto rep = call({"--format", "report", "verify", corpus("x-minus-1.cplx")});
  auto j = json::parse(rep.out);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["exit_code"], 0);
  const auto& degs = j["result"]["w"]["degrees"];
  ASSERT_EQ(degs.size(), 2u);
  EXPECT_EQ(degs[0]["rank"], 2);
  EXPECT_EQ(degs[1]["rank"], 1);
}

TEST(Cli, NegativeControl) {
  auto r = call({"verify", corpus("rank-one-zero.cplx")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "FAIL"));
  EXPECT_TRUE(has(r.out, "H_0 free rank 1")) << r.out;
  EXPECT_EQ(call({"novikov", corpus("rank-one-zero.cplx")}).code, 1);
}

TEST(Cli, IntegerNovikov) {
  auto r = call({"--ring", "Z", "novikov", corpus("two-minus-x.cplx")});
  EXPECT_EQ(r.code, 1);
  auto rep = call({"--ring", "Z", "--format", "report", "novikov", corpus("two-minus-x.cplx")});
  auto j = json::parse(rep.out);
  const auto& res = j["result"];
  EXPECT_EQ(res["x_side"]["acyclic"], "no");
  EXPECT_EQ(res["inv_side"]["acyclic"], "yes");
  EXPECT_TRUE(res["inv_side"].contains("series_inverse"));
  EXPECT_EQ(call({"--ring", "Q", "novikov", corpus("two-minus-x.cplx")}).code, 2);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(call({"verify", corpus("does-not-exist.cplx")}).code, 2);
  EXPECT_EQ(call({"validate", corpus("bad-square.cplx")}).code, 1);
  EXPECT_EQ(call({"homology", corpus("bad-square.cplx")}).code, 2);
  EXPECT_EQ(call({"--ring", "Z", "homology", corpus("two-minus-x.cplx")}).code, 2);
  EXPECT_EQ(call({"--ring", "GF:4", "validate", corpus("x.cplx")}).code, 2);
  EXPECT_EQ(call({"--trunc", "128", "verify", corpus("x.cplx")}).code, 2);
  EXPECT_EQ(call({"--format", "xml", "verify", corpus("x.cplx")}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);

  auto bad = scratch("bad.cplx");
  {
    std::ofstream o(bad);
    o << "{\"format\": \"p1dom-complex\", \"version\": 1, \"ring\": \"Q\"}";
  }
  auto r = call({"--format", "report", "validate", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.err, "missing member 'variable'")) << r.err;
  EXPECT_EQ(json::parse(r.out)["status"], "ERROR");
  std::filesystem::remove(bad);
}

TEST(Cli, SubcommandsOnCorpus) {
  EXPECT_EQ(call({"validate", corpus("koszul.cplx")}).code, 0);
  auto h = call({"homology", corpus("koszul.cplx")});
  EXPECT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(call({"novikov", corpus("gf3-torsion.cplx")}).code, 0);
  EXPECT_EQ(call({"h0", corpus("x-minus-1.sheaf")}).code, 0);
  EXPECT_EQ(call({"hyper", corpus("o-minus-2.sheaf")}).code, 0);
  EXPECT_EQ(call({"dominate", corpus("x.cplx")}).code, 0);
  EXPECT_EQ(call({"verify", corpus("gf3-torsion.cplx")}).code, 0);
  EXPECT_EQ(call({"verify", corpus("koszul.cplx")}).code, 0);
}

TEST(Cli, ExtendEmitsTheSheafFile) {
  auto r = call({"extend", corpus("x-minus-1.cplx")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(corpus("x-minus-1.sheaf")));
  auto path = scratch("w.cplx");
  auto d = call({"--out", path.string(), "dominate", corpus("x-minus-1.cplx")});
  EXPECT_EQ(d.code, 0);
  auto w = parse_complex<Q>(slurp(path.string()));
  EXPECT_EQ(w.base(), Base::constant);
  EXPECT_EQ(w.rank(0), 2u);
  std::filesystem::remove(path);
}

TEST(Cli, ReportsAreDeterministic) {
  for (const char* f : {"x-minus-1.cplx", "x.cplx", "rank-one-zero.cplx", "koszul.cplx"}) {
    auto a = call({"--format", "report", "verify", corpus(f)});
    auto b = call({"--format", "report", "verify", corpus(f)});
    EXPECT_EQ(a.out, b.out) << f;
    EXPECT_FALSE(a.out.empty());
    auto j = json::parse(a.out);
    EXPECT_EQ(j["inputs"][0], digest_string(slurp(corpus(f))));
  }
  auto a = call({"--format", "report", "--seed", "7", "selftest", "--cases", "2"});
  auto b = call({"--format", "report", "--seed", "7", "selftest", "--cases", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EnvironmentOverrides) {
  setenv("P1DOM_FORMAT", "report", 1);
  setenv("P1DOM_TRUNC", "8", 1);
  auto r = call({"verify", corpus("x-minus-1.cplx")});
  unsetenv("P1DOM_FORMAT");
  unsetenv("P1DOM_TRUNC");
  auto j = json::parse(r.out);
  EXPECT_EQ(j["config"]["trunc"], 8);
  setenv("P1DOM_RING", "Z", 1);
  EXPECT_EQ(call({"novikov", corpus("two-minus-x.cplx")}).code, 1);
  EXPECT_EQ(call({"novikov", corpus("x.cplx")}).code, 2);
  unsetenv("P1DOM_RING");
  auto flag = call({"--trunc", "32", "--format", "report", "verify", corpus("x.cplx")});
  EXPECT_EQ(json::parse(flag.out)["config"]["trunc"], 32);
}

TEST(Cli, Selftest) {
  auto r = call({"selftest", "--cases", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_FALSE(has(r.out, "FAIL")) << r.out;
}

}  // namespace
}  // namespace p1dom
