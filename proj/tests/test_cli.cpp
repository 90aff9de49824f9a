#include "affine_fock/cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

using affine_fock::cli::run;
using nlohmann::json;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST(Cli, CoreQuotient) {
  const Result r = call({"core-quotient", "--l", "2", "--lambda", "[1]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"c":[1,-1],"q":[[],[]],"roundtrip":true})"));
  const Result inv = call({"core-quotient", "--l", "2", "--inverse", "--c", "[1,-1]", "--q", "[[],[]]"});
  EXPECT_EQ(inv.code, 0);
  EXPECT_EQ(json::parse(inv.out), json::parse(R"({"lambda":[1]})"));
}

TEST(Cli, ActSides) {
  const json expected = json::parse(R"([{"coeff":"-1","label":[]}])");
  for (const std::string side : {"explicit", "frenkel-kac", "geometric"}) {
    const Result r = call({"act", "--g", "e_0", "--lambda", "[1]", "--l", "2", "--side", side});
    EXPECT_EQ(r.code, 0) << side << r.err;
    EXPECT_EQ(json::parse(r.out), expected) << side;
  }
  const Result p = call({"act", "--g", "p_1(-1)", "--lambda", "[]", "--l", "2", "--side", "frenkel-kac"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(json::parse(p.out), json::parse(R"([{"coeff":"-1","label":[2]},{"coeff":"1","label":[1,1]}])"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"act", "--g", "e_0", "--lambda", "[1", "--l", "2"}).code, 2);
  EXPECT_EQ(call({"act", "--g", "x_0", "--lambda", "[1]", "--l", "2"}).code, 2);
  EXPECT_EQ(call({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(call({"act", "--g", "e_5", "--lambda", "[1]", "--l", "2"}).code, 3);
  EXPECT_EQ(call({"act", "--g", "e_0", "--lambda", "[1,2]", "--l", "2"}).code, 3);
  EXPECT_EQ(call({"act", "--g", "e_0", "--lambda", "[1]", "--l", "1"}).code, 3);
  EXPECT_EQ(call({"act", "--g", "p_1(1)", "--lambda", "[1]", "--l", "2"}).code, 3);
  EXPECT_EQ(call({"act", "--g", "p_1(-3)", "--lambda", "[1]", "--l", "2", "--side", "frenkel-kac", "--window", "2"}).code, 4);
}

TEST(Cli, VerifyStatusAndMismatch) {
  const Result ok = call({"verify", "--suite", "relations", "--l", "3", "--degree", "3"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(json::parse(ok.out)["status"], "ok");
  const Result bad = call({"verify", "--suite", "relations", "--l", "3", "--degree", "3", "--mutate", "f-sign-literal"});
  EXPECT_EQ(bad.code, 1);
  const json j = json::parse(bad.out);
  EXPECT_EQ(j["status"], "mismatch");
  EXPECT_FALSE(j["failures"].empty());
  EXPECT_EQ(j["failures"][0]["suite"], "relations");
  EXPECT_EQ(call({"verify", "--suite", "relations", "--mutate", "nope"}).code, 2);
}

TEST(Cli, VerifyCsv) {
  const Result r = call({"verify", "--suite", "relations", "--l", "3", "--degree", "3", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("suite,status,checked,failure_count\nrelations,ok,", 0), 0u) << r.out;
}

TEST(Cli, Matrix) {
  const Result csv = call({"matrix", "--g", "f_1", "--l", "2", "--degree", "1", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "row,col,row_label,col_label,value\n0,0,2,1,1\n1,0,1;1,1,-1\n");
  const Result js = call({"matrix", "--g", "f_1", "--l", "2", "--degree", "1"});
  EXPECT_EQ(js.code, 0);
  const json j = json::parse(js.out);
  EXPECT_EQ(j["target_degree"], 2);
  EXPECT_EQ(j["entries"].size(), 2u);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args = {"verify", "--suite", "all", "--l", "3", "--degree", "4"};
  const Result a = call(args), b = call(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PrettyIsValidJson) {
  const Result r = call({"act", "--g", "h_0", "--lambda", "[2,1]", "--l", "3", "--pretty"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find('\n'), r.out.size() - 1);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.is_array());
}
