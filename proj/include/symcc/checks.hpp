#ifndef SYMCC_CHECKS_HPP
#define SYMCC_CHECKS_HPP

#include <functional>
#include <string>
#include <vector>

namespace symcc::checks {

/// Outcome of one exit criterion. `passed` already includes the time budget.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

CheckResult oracle_equivalence();        // 1
CheckResult ring_axioms();               // 2
CheckResult pushforward_composition();   // 3
CheckResult constant_rank_series();      // 4
CheckResult tame_closed_form();          // 5
CheckResult devissage();                 // 6
CheckResult m_matrix();                  // 7
CheckResult index_consistency();         // 8
CheckResult acyclicity_grid();           // 9

/// Criteria 1 through 9, in order.
std::vector<CheckResult> run_library_checks();

/// "[PASS] 3 <name>: <detail>". Timings are left out unless asked for, so
/// that the line is reproducible.
std::string format_line(const CheckResult& r, bool with_time = false);

}  // namespace symcc::checks

#endif  // SYMCC_CHECKS_HPP
