// Acceptance gates: seven numbered end-to-end criteria covering the oracle
// cohomology values, the multiplier table, the recorded block decompositions,
// the equivalence verdicts, certificate verification, dual-route agreement on
// every small catalog group, and a structural property suite.  Each criterion
// runs independently, keeps counting past a failure, and reports one line;
// the gate binary and the reproduce command both drive these.
#pragma once

#include <string>
#include <vector>

#include "modring.hpp"

namespace tgrip {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  i64 checks = 0;      // individual expectations evaluated
  i64 failures = 0;    // how many of them missed
  std::string detail;  // first failure, or a short summary when passing
};

// Runs one criterion (1..7); throws std::out_of_range for anything else.
// Unexpected exceptions inside a criterion are converted into a failure.
CriterionResult run_criterion(int number);

// All seven, in order.
std::vector<CriterionResult> run_acceptance();

// One line per criterion, the format the gate binary prints.
std::string format_result(const CriterionResult& r);

}  // namespace tgrip
