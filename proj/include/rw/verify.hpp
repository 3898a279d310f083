#pragma once

#include <string>
#include <vector>

namespace rw {

// One law-replay check: a descriptive law name, a pass flag, and a short
// detail line (counts swept, first counterexample, ...).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int chain_cap = 6;        // exhaustive chain sweeps go up to this size
  int subst_domain_cap = 4; // substitution sweeps cap the chain-map domain
  int max_len = 8;          // shape-length truncation for term sweeps
  int random_instances = 50;
  unsigned long long seed = 1;
  bool inject_mutant = false;  // deliberately break one oracle (self-test)
};

// scope: chains, terms, algebras, ordered, ramsey, or all.
std::vector<CheckResult> run_verify_suite(const std::string& scope,
                                          const VerifyOptions& opts = {});

}  // namespace rw
