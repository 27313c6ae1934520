// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "symcc/checks.hpp"

namespace {

bool capture(const std::string& args, std::string& out) {
  const std::string line = std::string(SYMCC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(line.c_str(), "r");
  if (!pipe) return false;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  out.clear();
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int st = pclose(pipe);
  return WIFEXITED(st) && WEXITSTATUS(st) == 0;
}

symcc::checks::CheckResult determinism() {
  const std::vector<std::string> invocations = {
      "product --e 1^1 --e 1^1",
      "product --e \"1^2 2^1\" --tau \"s; 1^1\" --format json",
      "series --rank 2 --sing s:1 --sing t:2 --genus 1 --max-degree 4",
      "series --rank 1 --sing s:1 --max-degree 3 --shifted --format json",
      "series --rank 1 --max-degree 3 --format latex",
      "mtable --n 5",
      "mtable --n 4 --format json",
      "strata --n 5 --char 2",
      "strata --n 4 --format json",
      "pushforward --mu 2,1,1",
      "pushforward --lambda 3,1 --format latex",
      "acyclicity --genus 2 --rank 2 --sing s:1 --n 5 --omega \"x + y\"",
      "acyclicity --genus 1 --rank 1 --n 3 --format json",
      "epsilon-report --genus 2 --rank 1 --omega \"x + y\" --format json",
      "epsilon-report --genus 1 --rank 1 --sing s:1 --omega 0",
      "index-degrees --genus 2 --max-degree 5",
      "index-degrees --genus 0 --max-degree 4 --format json",
      "selftest"};
  symcc::checks::CheckResult r;
  r.id = 10;
  r.name = "repeated CLI runs are byte-identical";
  r.budget_seconds = 120;
  r.passed = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& args : invocations) {
    std::string a, b;
    const bool ok = capture(args, a) && capture(args, b);
    if (!ok || a != b || a.empty()) {
      r.passed = false;
      r.detail = (ok ? "output differs: " : "command failed: ") + args;
      return r;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.detail = std::to_string(invocations.size()) + " invocations, each run twice";
  return r;
}

}  // namespace

int main() {
  bool all = true;
  auto results = symcc::checks::run_library_checks();
  results.push_back(determinism());
  for (const auto& r : results) {
    std::cout << symcc::checks::format_line(r, true) << "\n";
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
