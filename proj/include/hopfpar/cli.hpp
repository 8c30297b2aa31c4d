#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfpar {

// Exit codes: 0 all checks pass, 1 input error, 2 uncertified or inconclusive,
// 3 some check failed.
enum ExitCode { ExitOk = 0, ExitInput = 1, ExitUncertified = 2, ExitFailed = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hopfpar
