#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "folia/cli.hpp"
#include "folia/textio.hpp"

using folia::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, BoundsPrintsValue) {
  EXPECT_EQ(call({"bounds", "--theorem", "t1", "--m", "4"}).out, "4\n");
  Result r = call({"bounds", "--theorem", "t2", "--m", "3", "--r-nonzero", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"value\": 6"), std::string::npos);
  Result t = call({"bounds", "--theorem", "t1", "--range", "2:4"});
  EXPECT_EQ(t.out, "2 1\n3 1\n4 4\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"check-invariant", "/nonexistent.fol"}).code, 2);
  EXPECT_EQ(call({"check-invariant", "gallery:nope"}).code, 2);
  EXPECT_EQ(call({"bounds", "--theorem", "t1", "--m", "0"}).code, 2);
  EXPECT_EQ(call({"check-invariant", "gallery:eee-circle"}).code, 0);
  EXPECT_EQ(call({"nodal", "gallery:nodal-cubic"}).code, 0);
  EXPECT_EQ(call({"nodal", "gallery:nodal-cubic", "--with-infinity"}).code, 1);
}

TEST(Cli, EulerMismatchIsShown) {
  Result bad = call({"euler-check", "gallery:example2", "--chi", "3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("rhs: 2"), std::string::npos);
  EXPECT_NE(bad.out.find("identity_holds: false"), std::string::npos);
  EXPECT_EQ(call({"euler-check", "gallery:example2"}).code, 0);
}

TEST(Cli, CofactorAndConstruct) {
  EXPECT_EQ(call({"cofactor", "gallery:eee-circle"}).out, "2*x + 2*y\n");
  Result e = call({"construct", "eee", "--g", "x^2 + y^2 - 1", "--h", "x - 2"});
  ASSERT_EQ(e.code, 0);
  folia::SystemDocument d = folia::parse_system(e.out);
  EXPECT_EQ(folia::print_poly(d.fields.at(0).field.q()), "3*x^2 + y^2 - 4*x - 1");
  Result l = call({"construct", "log", "--curve", "X", "--curve", "Y", "--curve", "Y - X - Z", "--weight", "1", "--weight",
                   "i", "--weight", "-1 - i", "--format", "json"});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("\"infinity_invariant\": false"), std::string::npos);
}

TEST(Cli, FileInput) {
  std::string path = ::testing::TempDir() + "cli_input.fol";
  {
    std::ofstream f(path);
    f << "[field eee]\np = x^2+y^2-1 - (x-2)*2*y\nq = x^2+y^2-1 + (x-2)*2*x\n[curve S]\nf = x^2+y^2-1\n";
  }
  Result r = call({"cofactor", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*x + 2*y\n");
  std::remove(path.c_str());
}

TEST(Cli, OvalsAndPolylines) {
  std::string path = ::testing::TempDir() + "ovals.txt";
  Result r = call({"ovals", "gallery:circle", "--res", "64", "--emit-polylines", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(path);
  std::string first;
  std::getline(f, first);
  EXPECT_FALSE(first.empty());
  std::remove(path.c_str());
}

TEST(Cli, PaperSuiteIsDeterministic) {
  Result a = call({"paper-suite", "--format", "json"}), b = call({"paper-suite", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"failed\": 0"), std::string::npos);
}
