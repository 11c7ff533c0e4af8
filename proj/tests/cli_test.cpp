#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(INVSEMI_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) r.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

using nlohmann::ordered_json;

TEST(Cli, InfoJson) {
  const auto r = run("info 41,99,70,53 --json");
  ASSERT_EQ(r.code, 0);
  const auto j = ordered_json::parse(r.out);
  EXPECT_EQ(j["frobenius"], 1019);
  EXPECT_EQ(j["symmetric"], true);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(Cli, InvPoly) {
  const auto r = run("invpoly 3,4,5 7");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("j: X1*X2"), std::string::npos);
  const auto j = ordered_json::parse(run("invpoly 3,4,5 7 --json").out);
  EXPECT_EQ(j["j"]["text"], "X1*X2");
  EXPECT_EQ(j["j"]["terms"][0]["exp"], (std::vector<long long>{1, 1, 0}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("info 0,3").code, 2);
  EXPECT_EQ(run("info").code, 2);
  EXPECT_EQ(run("nosuch 3,4").code, 2);
  EXPECT_EQ(run("info 4,6").code, 1);
  EXPECT_EQ(run("classify 3,4,5").code, 1);
  EXPECT_EQ(run("bresinsky 10,14,15,21").code, 1);
  EXPECT_EQ(run("hec 5 3").code, 1);
  EXPECT_EQ(run("glue --h1 2,3 --d1 4 --h2 2,3 --d2 6").code, 1);
  EXPECT_EQ(run("verify-4gor 43,20,27,37").code, 0);
}

TEST(Cli, HumanAndJsonAgree) {
  for (const std::string cmd : {"info 6,13,23", "mu 10,14,15,21", "apery 5,6,9 9", "free 4,6,5"}) {
    const auto human = run(cmd).out;
    const auto j = ordered_json::parse(run(cmd + " --json").out);
    for (const auto& [key, value] : j.items()) {
      if (!value.is_number()) continue;
      EXPECT_NE(human.find(key + ": " + value.dump()), std::string::npos) << cmd << " " << key;
    }
  }
}

TEST(Cli, JsonRoundTrip) {
  for (const std::string cmd :
       {"bresinsky 41,99,70,53", "glue --h1 3,4 --d1 5 --h2 2,3 --d2 7 --invpoly 8 6", "ann 4,6,5 12",
        "check-as 6,13,23", "classify 8,9,10,14,15", "factorize 3,4,5 12", "sample 3,4,5 --seed 4"}) {
    const auto r = run(cmd + " --json");
    ASSERT_EQ(r.code, 0) << cmd;
    const auto j = ordered_json::parse(r.out);
    EXPECT_EQ(ordered_json::parse(j.dump()), j) << cmd;
    EXPECT_EQ(j.dump(2) + "\n", r.out) << cmd;
  }
}

TEST(Cli, SeedIsDeterministic) {
  EXPECT_EQ(run("sample 11,13,17 --seed 5 --json").out, run("sample 11,13,17 --seed 5 --json").out);
}

TEST(Cli, BresinskyStructure) {
  const auto j = ordered_json::parse(run("bresinsky 41,99,70,53 --json").out);
  EXPECT_EQ(j["alpha"], (std::vector<long long>{3, 11, 2, 20}));
  EXPECT_EQ(j["generators"][0]["text"], "x1^3 - x3*x4");
  EXPECT_EQ(j["generators"][1]["text"], "x2^11 - x1^2*x4^19");
  EXPECT_EQ(j["alpha_off"]["a24"], 19);
  EXPECT_TRUE(j.contains("witness_index"));
}

}  // namespace
