#pragma once

// The `tperm` command line, callable in-process.
//
// Exit status: 0 success, 1 a failed self-test, 2 malformed input (text,
// JSON or argv), 3 a domain error raised by the library.

#include <ostream>
#include <string>
#include <vector>

namespace tperm::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tperm::cli
