#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "ppdiamond/serialize.hpp"

namespace ppd::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ppdiamond");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CountPrintsValueAndProvenance) {
  const auto r = invoke({"count", "--k", "1", "--n", "6"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "14\n");
  EXPECT_EQ(r.err, "method: shifts\n");
}

TEST(Cli, CountJsonUsesStrings) {
  const auto r = invoke({"count", "--k", "2", "--n", "30", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], "4669");
  EXPECT_EQ(j["method"], "shifts");
}

TEST(Cli, TableCsv) {
  const auto r = invoke({"table", "--k", "1", "--max-n", "7", "--format", "csv"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("n,count,method\n", 0), 0u);
  EXPECT_NE(r.out.find("\n7,17,shifts\n"), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.size() - 12), "7,17,shifts\n");
}

TEST(Cli, EveryMethodPrintsTheSameCounts) {
  std::string reference;
  for (const std::string method : {"auto", "enumerate", "series", "shifts", "quasipoly", "compressed"}) {
    const auto r = invoke({"table", "--k", "2", "--min-n", "5", "--max-n", "20", "--method", method});
    ASSERT_EQ(r.code, kOk) << method << r.err;
    if (reference.empty()) reference = r.out;
    EXPECT_EQ(r.out, reference) << method;
  }
}

TEST(Cli, OutputIndependentOfJobs) {
  const auto one = invoke({"table", "--k", "2", "--max-n", "120", "--method", "compressed", "--format", "csv"});
  const auto four = invoke({"table", "--k", "2", "--max-n", "120", "--method", "compressed", "--format", "csv", "--jobs", "4"});
  EXPECT_EQ(one.out, four.out);
  const auto v1 = invoke({"verify", "--k", "1", "--max-n", "60"});
  const auto v4 = invoke({"verify", "--k", "1", "--max-n", "60", "--jobs", "3"});
  EXPECT_EQ(v1.out, v4.out);
}

TEST(Cli, Witnesses) {
  const auto r = invoke({"count", "--k", "1", "--n", "2", "--witnesses"});
  EXPECT_EQ(r.out, "2,0,0,0\n1,1,0,0\n1,0,1,0\n3\n");
  EXPECT_EQ(invoke({"count", "--k", "1", "--n", "2", "--witnesses", "--method", "series"}).code, kUsage);
}

TEST(Cli, QuasipolyJsonRoundTrips) {
  const auto r = invoke({"quasipoly", "--k", "1", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["period"], 6);
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["valid_from"], 0);
  EXPECT_EQ(j["coeffs"][0][3], "1/72");
  const auto qp = quasipoly_from_json(j);
  EXPECT_EQ(qp.count_at(7), 17);
  EXPECT_EQ(to_json(qp), j);
}

TEST(Cli, PolypartAndWaves) {
  const auto p = invoke({"polypart", "--k", "2"});
  EXPECT_EQ(p.code, kOk);
  EXPECT_NE(p.out.find("equal: true"), std::string::npos);
  const auto w = invoke({"waves", "--k", "1", "--max-n", "40"});
  EXPECT_EQ(w.code, kOk);
  EXPECT_NE(w.out.find("W_3: "), std::string::npos);
  EXPECT_NE(w.out.find("over n=0..40: 0"), std::string::npos);
}

TEST(Cli, VerifyKTwo) {
  const auto r = invoke({"verify", "--k", "2", "--max-n", "450", "--format", "json"});
  EXPECT_EQ(r.code, kOk) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 10u);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "PASS") << c["check"];
}

TEST(Cli, ParamsJson) {
  const auto j = nlohmann::json::parse(invoke({"params", "--k", "2", "--format", "json"}).out);
  EXPECT_EQ(j["period"], 210);
  EXPECT_EQ(j["shifts"], nlohmann::json::array({0, 5}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"count", "--k", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--k", "0", "--n", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--k", "2", "--n", "3", "--method", "quasipoly"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--k", "2", "--n", "25", "--method", "enumerate", "--enum-budget", "50"}).code,
            kBudgetExceeded);
  EXPECT_EQ(invoke({"count", "--k", "2", "--n", "25", "--method", "compressed", "--tuple-budget", "50"}).code, kOk);
  EXPECT_EQ(invoke({"count", "--k", "5", "--n", "100", "--method", "quasipoly"}).code, kBudgetExceeded);
}

TEST(Cli, EnvironmentBudget) {
  ::setenv("DIAMOND_BUDGET", "40", 1);
  const auto r = invoke({"count", "--k", "2", "--n", "25", "--method", "enumerate"});
  const auto flag_wins = invoke({"count", "--k", "2", "--n", "10", "--method", "enumerate", "--enum-budget", "100000"});
  ::unsetenv("DIAMOND_BUDGET");
  EXPECT_EQ(r.code, kBudgetExceeded);
  EXPECT_EQ(flag_wins.code, kOk);
}

}  // namespace
}  // namespace ppd::cli
