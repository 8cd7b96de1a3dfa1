#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rikit::cli {

/// Runs one subcommand. Exit codes: 0 success, 1 the analysis found a
/// violation or counterexample, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rikit::cli
