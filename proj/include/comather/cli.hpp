#pragma once

#include <iosfwd>

namespace comather {

// Exit codes: 0 success, 1 mismatch or violation, 2 bad input, 3 resource cap, 4 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace comather
