#pragma once

#include <iosfwd>

namespace qlift {

/// Exit codes: 0 ok, 1 usage, 2 validation or other module error, 3 budget, 4 parse.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlift
