#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "davenport/record.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DAVENPORT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, ExactJson) {
  const auto r = run("exact --p 5 --a 1 --b 1 --c 0 --enumerate --format json");
  ASSERT_EQ(r.code, 0);
  const auto rec = davenport::record_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(rec.d_exact, 7U);
  EXPECT_EQ(rec.extremal_count, 2U);
  ASSERT_TRUE(rec.extremal_samples);
  ASSERT_EQ(rec.extremal_samples->size(), 2U);
  EXPECT_EQ(rec.extremal_samples->at(0), "[2]^3 [3]^3");
  EXPECT_EQ(rec.extremal_samples->at(1), "[1]^3 [4]^3");
}

TEST(Cli, ExactCsv) {
  const auto r = run("exact --p 11 --a 1 --b 1 --c 1 --format csv");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header;
  std::string row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(davenport::csv_split(header), davenport::record_columns());
  EXPECT_EQ(davenport::csv_split(row)[6], "12");
}

TEST(Cli, NegativeCoefficients) {
  const auto r = run("exact --p 7 --a 1 --b -1 --c 0 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("d_exact"), 1);
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run("exact --p 9 --a 1 --b 1 --c 1").code, 2);
  EXPECT_EQ(run("exact --p 7 --a 0 --b 0 --c 1").code, 2);
  EXPECT_EQ(run("exact --p 37 --a 1 --b 1 --c 1").code, 2);
  EXPECT_EQ(run("exact --p 7").code, 2);
  EXPECT_EQ(run("table 4").code, 2);
  EXPECT_EQ(run("verify --max-p 31").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, BudgetExitsWithThree) {
  EXPECT_EQ(run("exact --p 29 --a 1 --b 1 --c 1 --enumerate --budget-nodes 10").code, 3);
}

TEST(Cli, TablesAndVerifyPass) {
  const auto t2 = run("table 2");
  EXPECT_EQ(t2.code, 0);
  EXPECT_NE(t2.out.find("rows match"), std::string::npos);
  EXPECT_EQ(run("table 3 --format csv").code, 0);
  EXPECT_EQ(run("verify --max-p 5").code, 0);
}

TEST(Cli, BoundsAboveTheSearchCap) {
  const auto r = run("bounds --p 311 --a 1 --b 1 --c 1 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("d_exact").is_null());
  EXPECT_EQ(j.at("p"), 311);
}
