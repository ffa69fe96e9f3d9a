#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qf::cli {

// Runs one qf command. `args` excludes the program name. Exit codes:
//   0 success (and true boolean verdicts)
//   1 false boolean verdict, or a failed verification suite
//   2 usage or parse error
//   3 unsupported for the given field
//   4 resource bound exceeded
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qf::cli
