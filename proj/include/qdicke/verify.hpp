#pragma once
// Self-check suites behind the CLI verify subcommand: exact combinatorial
// identities, cross-constructor agreement, Schmidt reconstruction, the
// entropy oracle, circuit fidelities, and algebra commutation relations.

#include <string>
#include <vector>

namespace qdicke {

struct VerifyOptions {
  int max_n = 6;
  int max_d = 3;
  unsigned int seed = 0;
  long long sample = 0;  // 0 runs every case; otherwise cap per suite
  // Deliberately corrupts the Schmidt coefficients used by the entropy suite
  // (exponent sign flip) so a mutated build is seen to fail. Never set in
  // production paths.
  bool flip_lambda_sign = false;
};

struct SuiteResult {
  std::string name;
  long long cases = 0;
  double max_dev = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

// One line per suite: name, case count, max deviation, PASS/FAIL.
std::string format_report(const std::vector<SuiteResult>& results);

bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace qdicke
