#include <sstream>

#include "support.hpp"
#include "tperm_check/cli.hpp"
#include "tperm_check/generators.hpp"

namespace tperm {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, SpecExamples) {
  EXPECT_EQ(run({"demazure", "s0@0", "s0@0"}).out, "s0@0\n");
  EXPECT_EQ(run({"slipface", "fin chi=1 lo=-1 v=[1,-1,0,-2]", "1", "0"}).out, "3\n");
}

TEST(Cli, ShowRoundTripsCorpus) {
  for (const Perm& p : check::corpus()) {
    const auto once = run({"show", format_perm(p)});
    ASSERT_EQ(once.status, 0);
    const auto twice = run({"show", once.out.substr(0, once.out.size() - 1)});
    ASSERT_EQ(twice.out, once.out);
    const auto json = run({"--json", "show", format_perm(p)});
    ASSERT_EQ(run({"show", json.out}).out, once.out);
  }
}

TEST(Cli, Operations) {
  EXPECT_EQ(run({"inverse", "fin chi=1 lo=-1 v=[1,-1,0,-2]"}).out, "fin chi=-1 lo=-2 v=[2,0,1,-1]\n");
  EXPECT_EQ(run({"compose", "s0@0", "s1@0"}).out, "fin chi=0 lo=0 v=[1,2,0]\n");
  EXPECT_EQ(run({"demazure", "s0@2", "s1@2", "s0@2"}).out, "affine k=2 w=[3,-2]\n");
  EXPECT_EQ(run({"demazure", "--oracle", "s0@2", "s1@2", "s0@2"}).out, "affine k=2 w=[3,-2]\n");
  EXPECT_EQ(run({"inv", "fin chi=1 lo=-1 v=[1,-1,0,-2]"}).out, "5\n");
  EXPECT_EQ(run({"ess", "s0@0"}).out, "{(1,1)}\n");
  EXPECT_EQ(run({"ess", "id@0"}).out, "{}\n");
  EXPECT_EQ(run({"bruhat", "id@0", "s0@0"}).out, "true\n");
  EXPECT_EQ(run({"bruhat", "s0@0", "s1@0"}).out, "false\n");
  EXPECT_EQ(run({"reduced-words", "fin chi=0 lo=0 v=[2,1,0]"}).out, "word k=0 [0,1,0]\nword k=0 [1,0,1]\n");
  EXPECT_EQ(run({"reduced-words", "--count-only", "fin chi=0 lo=0 v=[3,2,1,0]"}).out, "16\n");
  EXPECT_EQ(run({"hecke-count", "s0@0", "2"}).out, "3\n");
  EXPECT_EQ(run({"--json", "hecke-count", "s0@2", "100"}).out, "{\"count\":\"1267650600228229401496703205375\"}\n");
  EXPECT_EQ(run({"gamma-rd", "1", "-1"}).out, "fin chi=-1 lo=-2 v=[1,2,-1,0]\n");
  EXPECT_EQ(run({"split-of", "affine k=2 w=[0,3]"}).out, "split k=2 e=[-2,0]\n");
  EXPECT_EQ(run({"chain-tau", "chain k=2 [d=1:T 1, d=1:T 0]"}).out, "affine k=2 w=[-2,3]\n");
  EXPECT_EQ(run({"wtau-points", "affine k=2 w=[-2,3]", "1", "1"}).out, "chain k=2 [d=1:T 1, d=1:T 0]\n");
  EXPECT_EQ(run({"wtau-points", "--count-only", "--method", "brute", "id@2", "1", "1"}).out, "9\n");
  EXPECT_EQ(run({"wtau-points", "--count-only", "--expand", "id@2", "1", "1"}).out, "9\n");
}

TEST(Cli, Tables) {
  const auto t = run({"slipface", "s0@2", "--box", "0:2,0:1"});
  EXPECT_EQ(t.out, "a\\b  0  1\n0    0  0\n1    1  1\n2    2  1\n");
  const auto j = run({"--json", "slipface", "s0@2", "--box", "0:2,0:1"});
  EXPECT_EQ(j.out, "{\"a\":[0,2],\"b\":[0,1],\"s\":[[0,0],[1,1],[2,1]]}\n");
  const auto split = run({"gamma-split", "split k=2 e=[-2,0]", "--g", "3", "--x-range", "-1:1"});
  EXPECT_EQ(split.status, 0);
  EXPECT_NE(split.out.find("affine k=2 w=[0,3]"), std::string::npos);
  EXPECT_NE(split.out.find("x(m)   0  1  2"), std::string::npos) << split.out;
  const auto report = run({"genus1-report", "2", "3"});
  EXPECT_NE(report.out.find("status        PASS"), std::string::npos) << report.out;
  const auto flagged = run({"--json", "genus1-report", "2", "3", "--test-k", "4"});
  EXPECT_NE(flagged.out.find("\"passed\":false"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const struct {
    std::vector<std::string> args;
    int status;
    const char* names;
  } cases[] = {
      {{"show", "affine k=2 w=[0,"}, 2, "ParseError"},
      {{"show", "{\"period\":2"}, 2, "ParseError"},
      {{"bogus"}, 2, "ParseError"},
      {{"slipface", "s0@0", "x", "1"}, 2, "ParseError"},
      {{"slipface", "s0@0", "--box", "1:0,0:1"}, 2, "ParseError"},
      {{"show", "affine k=2 w=[0,2]"}, 3, "DuplicateResidue"},
      {{"compose", "s0@2", "s0@3"}, 3, "PeriodMismatch"},
      {{"bruhat", "iota1@0", "id@0"}, 3, "ShiftMismatch"},
      {{"reduced-words", "iota1@0"}, 3, "ShiftNonzero"},
      {{"gamma-rd", "0", "3"}, 3, "BadParameters"},
      {{"wtau-points", "--method", "brute", "id@0", "1"}, 3, "BadPeriod"},
  };
  for (const auto& c : cases) {
    const auto r = run(c.args);
    EXPECT_EQ(r.status, c.status) << c.args[0] << ": " << r.err;
    EXPECT_NE(r.err.find(c.names), std::string::npos) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("selftest"), std::string::npos);
}

TEST(Cli, SelftestSubset) {
  const auto r = run({"selftest", "--only", "1", "4"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  EXPECT_EQ(r.out.rfind("[PASS] 1 ", 0), 0u);
}

}  // namespace
}  // namespace tperm
