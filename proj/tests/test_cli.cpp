#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tdframe/cli.hpp"
#include "tdframe/construct.hpp"
#include "tdframe/serialize.hpp"

using namespace tdframe;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "tdframe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("tdframe_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, Table) {
  const Invocation r = run({"table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, table_to_csv(reproduce_table()));
  EXPECT_NE(r.out.find("na-discrepancy:published=8"), std::string::npos);
}

TEST(Cli, SixJson) {
  const Invocation r = run({"six", "--family", "triangular", "--size", "5", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 6u);
  for (const auto& c : j) EXPECT_TRUE(c["report"]["tight"].get<bool>());
}

TEST(Cli, GlobalFlagsAfterSubcommand) {
  const Invocation a = run({"--format", "pretty", "six", "--family", "petersen"});
  const Invocation b = run({"six", "--family", "petersen", "--format", "pretty"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ClassifyNonTight) {
  const std::string path = temp_file(
      "nontight.json", R"({"N":3,"entries":[["1","1/2","1/3"],["1/2","1","1/4"],["1/3","1/4","1"]]})");
  const Invocation r = run({"classify", "--gram", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"tag\":\"not-two-distance-tight\""), std::string::npos);
}

TEST(Cli, ClassifyAndVerify) {
  const GramSet g = dgs_gram(generate(Family::triangular, 5), 1);
  const std::string path = temp_file("t5.json", gram_to_json(g).dump());
  Invocation r = run({"classify", "--gram", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"tag\":\"design-S1\""), std::string::npos);
  r = run({"verify", "--gram", path, "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("10,4,true,5/2,25,1/6,-2/3,6,0,two-design,2,false"), std::string::npos);
}

TEST(Cli, ExactModeRejectsFloats) {
  const std::string path = temp_file("float.json", R"({"entries":[[1.0,0.0],[0.0,1.0]]})");
  Invocation r = run({"verify", "--gram", path});
  EXPECT_EQ(r.code, 2);
  r = run({"verify", "--gram", path, "--mode", "float"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, FloatModeClassifies) {
  const GramSet g = shift_lift(dgs_gram(generate(Family::triangular, 6), 2));
  const std::string path = temp_file("t6.json", gram_to_json(g).dump());
  const Invocation r = run({"--mode", "float", "--tol", "1e-9", "classify", "--gram", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"tag\":\"shifted-S2\""), std::string::npos);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_EQ(run({"classify", "--gram", "/nonexistent/x.json"}).code, 2);
  EXPECT_EQ(run({"classify", "--gram", temp_file("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "table"}).code, 2);
  EXPECT_EQ(run({"six", "--family", "paley", "--size", "7"}).code, 2);
  EXPECT_EQ(run({"embed", "--family", "petersen"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, NotPsdExitsOne) {
  const std::string path = temp_file("notpsd.json", R"({"entries":[["1","2"],["2","1"]]})");
  EXPECT_EQ(run({"verify", "--gram", path}).code, 1);
}

TEST(Cli, SrgSubcommands) {
  Invocation r = run({"srg", "check", "--params", "10,6,3,3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("k(k-lambda-1)=12 != (v-k-1)mu=9"), std::string::npos);
  r = run({"srg", "check", "--params", "10,6,3,4"});
  EXPECT_EQ(r.code, 0);
  r = run({"srg", "gen", "--family", "clebsch-complement"});
  EXPECT_EQ(r.code, 0);
  const std::string path = temp_file("cc.json", r.out);
  r = run({"srg", "check", "--graph", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"params\":{\"v\":16,\"k\":10,\"lambda\":6,\"mu\":6}"), std::string::npos);
  const std::string cyc = temp_file("c6.json", R"({"v":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]})");
  EXPECT_EQ(run({"srg", "check", "--graph", cyc}).code, 1);
}

TEST(Cli, Embed) {
  Invocation r = run({"embed", "--family", "triangular", "--size", "5", "--region"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[\"1/6\",\"-2/3\"]"), std::string::npos);
  r = run({"embed", "--family", "triangular", "--size", "5", "--weights", "0,4/9,5/9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_gram_json(r.out), simplex_gram(10));
  r = run({"embed", "--family", "triangular", "--size", "5", "--which", "1", "--out",
           (std::filesystem::temp_directory_path() / "tdframe_test_out.json").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, EnvironmentMode) {
  const std::string path = temp_file("env.json", R"({"entries":[[1.0,0.0],[0.0,1.0]]})");
  ::setenv("TDFRAME_MODE", "float", 1);
  const int code = run({"verify", "--gram", path}).code;
  ::unsetenv("TDFRAME_MODE");
  EXPECT_EQ(code, 0);
}

TEST(Cli, BinaryIsDeterministic) {
  auto capture = [] {
    std::string out;
    FILE* p = ::popen(TDFRAME_BINARY " six --family lattice --size 3 --format json", "r");
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int status = ::pclose(p);
    EXPECT_EQ(WEXITSTATUS(status), 0);
    return out;
  };
  const std::string a = capture();
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, capture());
}
