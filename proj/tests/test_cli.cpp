#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#include "symcc/commands.hpp"
#include "symcc/errors.hpp"

using namespace symcc;
namespace cmd = symcc::commands;

namespace {

struct CliRun {
  std::string out;
  int status;
};

CliRun run(const std::string& args) {
  const std::string line = std::string(SYMCC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(line.c_str(), "r");
  CliRun r{"", -1};
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Commands, ProductExample) {
  EXPECT_EQ(cmd::product({"1^1", "1^1"}, {}, Format::text), "2*tau[0; 1^2] + tau[0; 2^1]\n");
  EXPECT_EQ(cmd::product({}, {"s; 1^1", "s;"}, Format::text), "tau[2*s; 1^1]\n");
  EXPECT_THROW(cmd::product({}, {}, Format::text), ArgumentError);
}

TEST(Commands, SeriesExample) {
  cmd::SheafArgs a;
  a.sing = {"s:1"};
  const std::string text = cmd::series(a, 1, false, Format::text);
  EXPECT_NE(text.find("degree 1: -(tau[0; 1^1] + tau[s;])\n"), std::string::npos);
  const auto j = nlohmann::json::parse(cmd::series(a, 2, false, Format::json));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["series"].size(), 3u);
  EXPECT_EQ(j["series"][1]["terms"][0]["coef"], "-1");
}

TEST(Commands, SingParsing) {
  EXPECT_EQ(cmd::parse_sing({"s:1", "t:2", "s:1"}), Divisor::parse("2*s + 2*t"));
  EXPECT_THROW(cmd::parse_sing({"s"}), ArgumentError);
  EXPECT_THROW(cmd::parse_sing({"s:x"}), ArgumentError);
  EXPECT_THROW(cmd::parse_sing({"s:-1"}), ArgumentError);
}

TEST(Commands, MtableIsUnitUpperTriangular) {
  const auto j = nlohmann::json::parse(cmd::mtable(4, Format::json));
  const auto& m = j["matrix"];
  for (std::size_t a = 0; a < m.size(); ++a) {
    EXPECT_EQ(m[a][a], "1");
    for (std::size_t b = 0; b < a; ++b) EXPECT_EQ(m[a][b], "0");
  }
  EXPECT_EQ(j["partitions"][0], "(4)");
}

TEST(Commands, MaxDegreeFromEnvironment) {
  ::setenv("SYMCC_MAX_DEGREE", "5", 1);
  EXPECT_EQ(cmd::default_max_degree(), 5u);
  ::setenv("SYMCC_MAX_DEGREE", "five", 1);
  EXPECT_THROW(cmd::default_max_degree(), ArgumentError);
  ::unsetenv("SYMCC_MAX_DEGREE");
  EXPECT_EQ(cmd::default_max_degree(), 8u);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("product --e 1^1 --e 1^1").status, 0);
  EXPECT_EQ(run("product --e 1^y").status, 2);
  EXPECT_EQ(run("mtable").status, 2);
  EXPECT_EQ(run("nosuchcommand").status, 2);
  EXPECT_EQ(run("series --rank 1 --wild").status, 3);
  EXPECT_EQ(run("pushforward --lambda 2,1 --char 2").status, 3);
  EXPECT_EQ(run("epsilon-report --genus 0 --rank 1 --omega 0").status, 3);
  EXPECT_EQ(run("acyclicity --genus 1 --rank 1 --sing s:2 --n 1").status, 2);
}

TEST(Binary, MaxDegreeFlagAndFormats) {
  const CliRun r = run("series --rank 1 --max-degree 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "degree 0: tau[0;]\ndegree 1: -tau[0; 1^1]\ndegree 2: tau[0; 1^2]\n");
  EXPECT_EQ(run("index-degrees --genus 1 --max-degree 2 --format latex").status, 0);
  EXPECT_EQ(run("strata --n 3 --format yaml").status, 2);
}
