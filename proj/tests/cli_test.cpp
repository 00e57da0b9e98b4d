#include "powersumkit/cli.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>

namespace powersumkit {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "powersumkit");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTable, LegendreStirlingRows) {
  const auto ls1 = run({"table", "--family", "ls1", "--rows", "7", "--format", "csv"});
  EXPECT_EQ(ls1.code, 0);
  EXPECT_NE(ls1.out.find("0,-86400,72000,-17544,1708,-70,1\n"), std::string::npos);
  const auto ls2 = run({"table", "--family", "ls2", "--rows", "7", "--format", "csv"});
  EXPECT_NE(ls2.out.find("0,64,11648,47824,25664,3192,112,1\n"), std::string::npos);
}

TEST(CliTable, RowZeroJson) {
  const auto r = run({"table", "--family", "stirling1", "--rows", "0", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"family\":\"stirling1\",\"rows\":[[\"1\"]]}\n");
}

TEST(CliTable, UsageErrors) {
  EXPECT_EQ(run({"table", "--family", "nope", "--rows", "3"}).code, 2);
  EXPECT_EQ(run({"table", "--family", "ls1", "--rows", "65"}).code, 2);
  EXPECT_EQ(run({"table", "--family", "ls1", "--rows", "-1"}).code, 2);
  EXPECT_EQ(run({"table", "--family", "ls1", "--rows", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"table", "--rows", "3"}).code, 2);
}

TEST(CliPowerSum, AllMethodsAgree) {
  const auto r = run({"powersum", "--k", "3", "--n", "3", "--method", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Brute 36\n"), std::string::npos);
  EXPECT_NE(r.out.find("LangOriginal 36\n"), std::string::npos);
  EXPECT_NE(r.out.find("BinomialRecurrence 36\n"), std::string::npos);
  EXPECT_NE(r.out.find("concordance OK\n"), std::string::npos);
}

TEST(CliPowerSum, SingleMethods) {
  EXPECT_EQ(run({"powersum", "--k", "0", "--n", "5", "--method", "LangRefined"}).out, "LangRefined 5\n");
  EXPECT_EQ(run({"powersum", "--k", "2", "--n", "4", "--r", "2", "--method", "RangeRStirling"}).out,
            "RangeRStirling 29\n");
}

TEST(CliPowerSum, MethodParameterMismatchIsUsageError) {
  EXPECT_EQ(run({"powersum", "--k", "2", "--n", "4", "--r", "2", "--method", "LangRefined"}).code, 2);
  EXPECT_EQ(run({"powersum", "--k", "2", "--n", "4", "--method", "bogus"}).code, 2);
  EXPECT_EQ(run({"powersum", "--k", "2", "--n", "4", "--r", "9"}).code, 2);
}

TEST(CliVerify, OrthogonalitySuitePasses) {
  const auto r = run({"verify", "--suite", "orthogonality", "--k-max", "15", "--n-max", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(" 0 failures"), std::string::npos);
}

TEST(CliVerify, LsTablesSuitePasses) {
  const auto r = run({"verify", "--suite", "ls_tables"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("suite ls_tables: 72 cells, 0 failures"), std::string::npos);
}

TEST(CliVerify, UnknownSuiteIsUsageError) {
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "ones", "--k-max", "0"}).code, 2);
}

TEST(CliVerify, FailingSuiteExitsOne) {
  suite_registry().emplace_back("deliberately_failing", [](const VerifyLimits&) {
    std::vector<VerifyCell> cells;
    cells.push_back(make_cell("b cell", [] { return Integer(1); }, [] { return Integer(2); }));
    cells.push_back(make_cell("a cell", [] { return Integer(1); }, [] { return Integer(1); }));
    cells.push_back({"c cell", []() -> std::pair<std::string, std::string> { throw InternalError("boom"); }});
    return cells;
  });
  const auto r = run({"verify", "--suite", "deliberately_failing"});
  suite_registry().pop_back();
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("3 cells, 2 failures"), std::string::npos);
  // Failures are printed in cell-id order.
  EXPECT_LT(r.out.find("FAIL b cell: expected 1, got 2"), r.out.find("FAIL c cell"));
  EXPECT_NE(r.out.find("exception: boom"), std::string::npos);
}

TEST(CliZeta, ExactAndDecimal) {
  const auto z1 = run({"zeta", "--k", "1"});
  EXPECT_EQ(z1.code, 0);
  EXPECT_NE(z1.out.find("zeta(2) = 1/6 · π^2\n"), std::string::npos);
  EXPECT_NE(z1.out.find("1.64493406684822643647241516664602518921"), std::string::npos);
  EXPECT_NE(run({"zeta", "--k", "2"}).out.find("1/90 · π^4"), std::string::npos);
  EXPECT_NE(run({"zeta", "--k", "5"}).out.find("1/93555 · π^10"), std::string::npos);
  EXPECT_EQ(run({"zeta", "--k", "0"}).code, 2);
}

TEST(CliGeneral, NoSubcommandIsUsageError) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

// The built binary, through a real process boundary.
int exit_status_of(const std::string& command) {
  const int status = std::system((command + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliBinary, ExitCodes) {
  const std::string exe = POWERSUMKIT_CLI_PATH;
  EXPECT_EQ(exit_status_of(exe + " zeta --k 3"), 0);
  EXPECT_EQ(exit_status_of(exe + " verify --suite ls_tables"), 0);
  EXPECT_EQ(exit_status_of(exe + " table --family bogus --rows 2"), 2);
  EXPECT_EQ(exit_status_of(exe + " verify --suite bogus"), 2);
  EXPECT_EQ(exit_status_of(exe), 2);
  EXPECT_EQ(exit_status_of("POWERSUMKIT_ROWS_CAP=3 " + exe + " table --family ls1 --rows 4"), 2);
  EXPECT_EQ(exit_status_of("POWERSUMKIT_ROWS_CAP=100 " + exe + " table --family ls1 --rows 80"), 0);
}

}  // namespace
}  // namespace powersumkit
