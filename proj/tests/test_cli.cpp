#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(SYMQE_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, DecideExamples) {
  auto r = run("decide --domain orthant --n 4 --coeffs 24,-18,-8,9,-1");
  EXPECT_EQ(r.out, "0 <= f, true\n");
  EXPECT_EQ(r.exit_code, 0);

  r = run("decide --domain orthant --n 4 --coeffs 24,-19,-7,9,-1");
  EXPECT_EQ(r.out, "0 <= f, false\n");
  EXPECT_EQ(r.exit_code, 1);

  r = run("decide --domain real --n 4 --coeffs 0,-2,1,1,0");
  EXPECT_EQ(r.out, "0 <= f, true\n");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, WitnessLine) {
  const auto r = run("decide --n 4 --coeffs 24,-19,-7,9,-1 --witness");
  EXPECT_EQ(r.out, "0 <= f, false\nwitness: (5/16, 1, 1, 1) value: -5445/32768\n");
}

TEST(Cli, MonomialBasisAndRationalInput) {
  const auto r = run("decide --n 5 --basis monomial --coeffs 0,0,0,0,24");
  EXPECT_EQ(r.out, "0 <= f, true\n");
  const auto half = run("decide --n 4 --coeffs 12,-19/2,-7/2,9/2,-1/2");
  EXPECT_EQ(half.out, "0 <= f, false\n");
}

TEST(Cli, TraceContainsFailingPairValues) {
  const auto r = run("trace --domain orthant --n 4 --coeffs 24,-19,-7,9,-1");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("(r,s)=(1,3) alpha=29 beta=-24 gamma=3 Delta=228 P=-108828 Q=14214 R=-12096 branch=failed"),
            std::string::npos);
  EXPECT_EQ(lines(r.out).back(), "0 <= f, false");
}

TEST(Cli, TraceRealExtremalHasZeroDiscriminants) {
  const auto r = run("trace --domain real --n 4 --coeffs -12,12,7,-8,1");
  EXPECT_EQ(r.exit_code, 0);
  int split_lines = 0;
  for (const auto& line : lines(r.out)) {
    if (line.rfind("r=", 0) != 0) continue;
    ++split_lines;
    EXPECT_NE(line.find("G=0 H=0 K=0"), std::string::npos) << line;
  }
  EXPECT_EQ(split_lines, 3);
}

TEST(Cli, TraceZeroPolynomial) {
  const auto r = run("trace --n 3 --coeffs 0,0,0,0,0");
  const auto out = lines(r.out);
  ASSERT_GE(out.size(), 4u);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(out[k - 1], "k=" + std::to_string(k) + " value=0");
  EXPECT_EQ(out.back(), "0 <= f, true");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, Convert) {
  EXPECT_EQ(run("convert --coeffs 0,0,0,0,24").out, "-6,8,3,-6,1\n");
  EXPECT_EQ(run("convert --coeffs 1,0,0,0,0").out, "1,0,0,0,0\n");
  EXPECT_EQ(run("convert --coeffs 0,0,1,0,0").out, "-1/2,0,1/2,0,0\n");
  EXPECT_EQ(run("convert --coeffs 0,0,x,0,0").exit_code, 2);
}

TEST(Cli, CubicMode) {
  EXPECT_EQ(run("decide --degree 3 --n 5 --coeffs -1,1,0").exit_code, 0);
  EXPECT_EQ(run("decide --degree 3 --n 5 --coeffs 1,-1,0").exit_code, 1);
  EXPECT_EQ(run("decide --degree 3 --domain real --n 5 --coeffs 1,-1,0").exit_code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("decide --n 1 --coeffs 1,0,0,0,0").exit_code, 2);
  EXPECT_EQ(run("decide --n 4 --coeffs 1,0,0,0").exit_code, 2);
  EXPECT_EQ(run("decide --n 4 --coeffs 1/0,0,0,0,0").exit_code, 2);
  EXPECT_EQ(run("decide --n 4 --coeffs 1.5,0,0,0,0").exit_code, 2);
  EXPECT_EQ(run("decide --n 4").exit_code, 2);
  EXPECT_EQ(run("decide --n 4 --coeffs 1,0,0,0,0 --domain sphere").exit_code, 2);
  EXPECT_EQ(run("bogus").exit_code, 2);
  EXPECT_EQ(run("bench --coeffs 1,0,0,0,0 --n-list 5,3").exit_code, 2);
  EXPECT_EQ(run("bench --coeffs 1,0,0,0,0 --n-list 1").exit_code, 2);
}

TEST(Cli, OracleCheckNeverMismatches) {
  for (const char* args : {"--n 4 --coeffs 24,-19,-7,9,-1", "--n 3 --coeffs 24,-19,-7,9,-1",
                           "--n 6 --coeffs 0,-10,4,7,-1 --domain real", "--n 5 --coeffs 3,-2,5,-4,1 --domain real",
                           "--n 7 --coeffs -6,8,3,-6,1"}) {
    const auto r = run(std::string("decide --oracle-check ") + args);
    EXPECT_TRUE(r.exit_code == 0 || r.exit_code == 1) << args;
  }
}

TEST(Cli, JsonRoundTrip) {
  const auto r = run("trace --json --n 4 --coeffs 24,-19,-7,9,-1");
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["decision"], false);
  EXPECT_TRUE(j.contains("timing_ms"));
  EXPECT_TRUE(j["trace"].is_array());
  EXPECT_EQ(j["witness"]["value"], "-5445/32768");

  const auto& in = j["input"];
  const std::string again = "decide --json --n " + std::to_string(in["n"].get<long>()) + " --domain " +
                            in["domain"].get<std::string>() + " --basis " + in["basis"].get<std::string>() +
                            " --coeffs " + in["coeffs"].get<std::string>();
  const auto j2 = nlohmann::json::parse(run(again).out);
  EXPECT_EQ(j2["decision"], j["decision"]);
  EXPECT_FALSE(j2.contains("trace"));
}

TEST(Cli, ParallelOutputIsIdentical) {
  const std::string args = "trace --n 30 --coeffs 24,-19,-7,9,-1 --witness";
  EXPECT_EQ(run(args).out, run(args + " --parallel --threads 4").out);
}

TEST(Cli, BenchCsv) {
  const auto r = run("bench --coeffs -6,8,3,-6,1 --n-list 10,20 --repeat 2");
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], "n,decision,millis");
  EXPECT_EQ(out[1].rfind("10,true,", 0), 0u);
  EXPECT_EQ(out[2].rfind("20,true,", 0), 0u);
  EXPECT_EQ(r.exit_code, 0);
}
