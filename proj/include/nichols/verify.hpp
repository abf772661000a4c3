#pragma once

#include <string>
#include <vector>

#include "nichols/common.hpp"
#include "nichols/realize.hpp"

namespace nichols {

/// One checked claim: a stable name, the outcome, and on interesting
/// outcomes a short detail string (counts, the offending instance).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct NamedSystem {
  std::string name;
  BilinearSystem sys;
};

/// The four scaled sub-diagram families that kill every higher-rank
/// candidate: three vertex triples over n = 6k and one pair over n = 4k,
/// instantiated for each k in ks and each unit scale s.  None of them is
/// realizable; the suites assert exactly that.
std::vector<NamedSystem> excluded_subsystems(const std::vector<i64>& ks);

std::vector<CheckResult> verify_fixed_case_criteria();  // suite thm1.7
std::vector<CheckResult> verify_rank3_chains();         // suite thm2.2
std::vector<CheckResult> verify_infinite_exclusions();  // suite thm3.1
std::vector<CheckResult> verify_enumeration_goldens();  // suite corollaries

/// Dispatch by CLI suite name (thm1.7 | thm2.2 | thm3.1 | corollaries).
std::vector<CheckResult> verify_suite(const std::string& suite);

}  // namespace nichols
