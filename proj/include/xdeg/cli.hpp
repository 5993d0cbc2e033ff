#pragma once

#include <ostream>

namespace xdeg {

// Full command-line front end: parses argv, dispatches the degree / tensor /
// verify / tower subcommands, writes reports to out and errors to err.
// Exit codes: 0 success, 1 a theorem record or claimed limit failed,
// 2 usage or input error, 3 resource cap hit.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xdeg
