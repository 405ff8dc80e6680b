#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(FDH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string example() { return std::string("--input ") + FDH_EXAMPLE_CSV; }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("fdh_cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, ReportOnExample) {
  const CliResult r = run(example() + " report");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["units"][3]["sigma_plus"], 0);
  EXPECT_EQ(doc["units"][0]["sigma_minus"], "inf");
  EXPECT_EQ(doc["units"][1]["grs"], "G-IRS");
  EXPECT_EQ(doc["units"][1]["left_rts"], "Left-DRS");
}

TEST(Cli, ExactModeAndDeterminism) {
  const CliResult a = run(example() + " --exact classify");
  const CliResult b = run(example() + " classify --exact");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["arithmetic"], "exact");
}

TEST(Cli, EfficiencyCsv) {
  const CliResult r = run(example() + " efficiency --technology crs --orientation input");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "dmu,score,witness,delta\n"
            "A,0.923076923077,D,0.153846153846\n"
            "B,0.615384615385,D,0.307692307692\n"
            "C,0.461538461538,D,0.384615384615\n"
            "D,1,D,1\n");
}

TEST(Cli, RatiosAndResponse) {
  CliResult r = run(example() + " ratios --dmu B");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["sigma_plus"], 2.25);
  r = run(example() + " response --dmu B");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("2,3.25"), std::string::npos);
  const auto out = std::filesystem::temp_directory_path() / "fdh_cli_test_steps.csv";
  r = run(example() + " response --dmu B --emit " + out.string());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(std::filesystem::exists(out));
  std::filesystem::remove(out);
}

TEST(Cli, FractionLiteralsAreAccepted) {
  const auto path = temp_file("fraction.csv", "dmu,in_x,out_y\nA,1,2\nB,3,13/4\n");
  EXPECT_EQ(run("--input " + path.string() + " classify").exit_code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("report").exit_code, 1);
  EXPECT_EQ(run(example() + " --eps 0.5 report").exit_code, 1);
  EXPECT_EQ(run(example() + " efficiency --technology bcc").exit_code, 1);
  EXPECT_EQ(run(example() + " ratios --dmu Z").exit_code, 2);
  EXPECT_EQ(run("--input /nonexistent.csv report").exit_code, 2);
  const auto no_out = temp_file("no_out.csv", "dmu,in_x\nA,1\n");
  EXPECT_EQ(run("--input " + no_out.string() + " report").exit_code, 2);
  std::filesystem::remove(no_out);
  const auto bad = temp_file("bad.csv", "dmu,in_x,out_y\nA,1,2\nB,2,1\n");
  EXPECT_EQ(run("--input " + bad.string() + " ratios --dmu B").exit_code, 2);
  std::filesystem::remove(bad);
}

TEST(Cli, Verify) {
  const CliResult r = run("verify --trials 5 --grid-steps 100 " + example());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

}  // namespace
