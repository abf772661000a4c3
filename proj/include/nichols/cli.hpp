#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nichols::cli {

/// Runs one command line (without the program name) against the given
/// streams.  Returns the process exit status: 0 success, 1 invalid input,
/// 2 search budget or capacity exceeded.  Reads NICHOLS_ZN_BUDGET to
/// override the default step budget.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nichols::cli
