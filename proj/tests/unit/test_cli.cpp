// Runs the lcw executable and checks exit codes and output.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#ifndef LCW_CLI_PATH
#error "LCW_CLI_PATH must point at the lcw executable"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("lcw_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args, const std::string& stdin_text = "") {
  const auto in = scratch() / "stdin.txt";
  std::ofstream(in) << stdin_text;
  const std::string cmd =
      std::string(LCW_CLI_PATH) + " " + args + " < " + in.string() + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, FamilyHamming5) {
  const auto r = run("family hamming2 --m 5");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["counts"][3], "155");
  EXPECT_EQ(j["counts"][16], "9398115");
  EXPECT_EQ(j["n"], 31);
  EXPECT_EQ(j["k"], 26);
}

TEST(Cli, FamilyMdsAndCsv) {
  const auto r = run("family mds --n 5 --k 3 --q 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["counts"], json::array({"1", "0", "0", "30", "15", "18"}));
  EXPECT_EQ(run("family even --n 4 --format csv --nonzero").out,
            "weight,count\n0,1\n2,6\n4,1\n");
  EXPECT_EQ(run("family even --n 4 --format csv").out,
            "weight,count\n0,1\n1,0\n2,6\n3,0\n4,1\n");
  EXPECT_EQ(run("family even --n 4 --plot-csv --nonzero").out.substr(0, 25),
            "weight,count,log10_count\n");
}

TEST(Cli, FamilyErrors) {
  EXPECT_EQ(run("family hamming2").code, 2);
  EXPECT_EQ(run("family nope --m 3").code, 2);
  EXPECT_EQ(run("family hamming2 --m 3 --format xml").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, FamilyRoundTripsThroughCheck) {
  const auto doc = run("family golay24").out;
  const auto r = run("check -", doc);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["gap_count"], 0);
}

TEST(Cli, CheckHamming4) {
  const auto r = run("check --family hamming2 --m 4");
  EXPECT_EQ(r.code, 1);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["gap_count"], 2);
  EXPECT_EQ(j["witnesses"][0]["defect"], "-1176");
}

TEST(Cli, CheckSingletonAndNewton) {
  EXPECT_EQ(run("check -", R"({"q":2,"n":3,"k":0,"counts":["1","0","0","0"]})").code, 0);
  const auto r = run("check --family even --n 4 --newton");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["newton"]["all_real"], true);
  EXPECT_EQ(run("check -", "{not json").code, 2);
  EXPECT_EQ(run("check").code, 2);
}

TEST(Cli, DualSimplex) {
  const auto doc = run("family simplex --m 3").out;
  const auto r = run("dual -", doc);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["counts"],
            json::array({"1", "0", "0", "7", "7", "0", "0", "1"}));
  EXPECT_EQ(run("dual --family simplex --m 3").out, r.out);
}

TEST(Cli, BruteAndTutte) {
  const auto h3 = write("h3.txt", run("gen hamming2 --m 3").out);
  const auto b = run("brute " + h3);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(json::parse(b.out)["counts"],
            json::array({"1", "0", "0", "7", "7", "0", "0", "1"}));
  const auto even = write("even.txt", "# even [4,3]\n2 4 3\n1 0 0 1\n0 1 0 1\n0 0 1 1\n");
  const auto t = run("tutte " + even);
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(json::parse(t.out)["counts"], json::array({"1", "0", "6", "0", "1"}));
  const auto poly = json::parse(run("tutte --polynomial " + even).out);
  EXPECT_EQ(poly["tutte_text"], "x^3 + x^2 + x + y");
  EXPECT_EQ(run("brute --budget 4 " + h3).code, 2);
  EXPECT_EQ(run("brute " + write("bad.txt", "2 3 2\n1 1 1\n1 1 1\n")).code, 2);
  EXPECT_EQ(run("brute /nonexistent/file").code, 2);
}

TEST(Cli, ThresholdAndVerdict) {
  auto j = json::parse(run("threshold 5 3").out);
  EXPECT_EQ(j["larger_root_interval"], json::array({"5", "6"}));
  j = json::parse(run("threshold 12 9").out);
  EXPECT_EQ(j["larger_root_interval"], json::array({"13", "14"}));
  const auto v = run("verdict 6 4 5");
  EXPECT_EQ(v.code, 1);
  const auto vj = json::parse(v.out);
  EXPECT_EQ(vj["status"], "not_log_concave");
  bool note = false;
  for (const auto& n : vj["notes"]) note |= n.get<std::string>().find("Hamming") != std::string::npos;
  EXPECT_TRUE(note);
  EXPECT_EQ(run("verdict 5 3 7").code, 0);
  EXPECT_EQ(run("threshold 5 2").code, 2);
}

TEST(Cli, Verify) {
  const auto r = run("verify hamming --m 3..8");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
  EXPECT_EQ(run("verify hamming --m 3..8").out, r.out);
  const auto j = json::parse(run("verify hrm_prm --q 2..3 --m 2..4 --format json").out);
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_EQ(run("verify mds").code, 0);
  EXPECT_EQ(run("verify hamming --m x").code, 2);
  EXPECT_EQ(run("verify nope").code, 2);
}

TEST(Cli, Field) {
  EXPECT_EQ(json::parse(run("field 4").out)["modulus"], json::array({1, 1, 1}));
  EXPECT_EQ(run("field 6").code, 2);
}
