#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ifam::cli {

// Runs the command line given by args (without the program name), writing
// primary output to out and diagnostics to err.
//
// Exit codes: 0 success; 1 a verification or hypothesis check came out
// negative; 2 malformed input, bad parameters, or an instance over a hard
// cap; 3 a search budget was exhausted before the search completed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// argv form; argv[0] is the program name and is ignored.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ifam::cli
