#ifndef SYMCC_COMMANDS_HPP
#define SYMCC_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "symcc/divisor.hpp"
#include "symcc/render.hpp"
#include "symcc/sheaves.hpp"

// Subcommand bodies of the command-line tool. Each returns the complete
// stdout text so that output can be compared byte for byte.
namespace symcc::commands {

/// Default truncation degree; SYMCC_MAX_DEGREE overrides it when set.
unsigned default_max_degree();

/// Builds rank drops from repeated "s:1" items.
Divisor parse_sing(const std::vector<std::string>& items);

struct SheafArgs {
  long genus = 0;
  long base_char = 0;
  unsigned rank = 1;
  std::vector<std::string> sing;
  bool wild = false;
  std::optional<long> coeff_char;
};

SheafDescriptor make_descriptor(const SheafArgs& a);

std::string product(const std::vector<std::string>& es, const std::vector<std::string>& taus, Format fmt);
std::string series(const SheafArgs& a, unsigned max_degree, bool shifted, Format fmt);
std::string mtable(unsigned n, Format fmt);
std::string strata(unsigned n, long base_char, Format fmt);
/// Exactly one of mu (a composition) and lambda (a partition) is nonempty.
std::string pushforward(const std::string& mu, const std::string& lambda, long base_char, Format fmt);
std::string acyclicity(const SheafArgs& a, long n, const std::optional<std::string>& omega, Format fmt);
std::string epsilon_report(const SheafArgs& a, const std::string& omega, Format fmt);
std::string index_degrees(long genus, unsigned max_degree, Format fmt);

struct SelftestOutcome {
  std::string text;
  bool passed = false;
};

/// Library criteria plus an in-process rerun of every subcommand.
SelftestOutcome selftest();

}  // namespace symcc::commands

#endif  // SYMCC_COMMANDS_HPP
