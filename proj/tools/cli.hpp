#ifndef ALGDEG_TOOLS_CLI_HPP
#define ALGDEG_TOOLS_CLI_HPP

#include <iosfwd>

namespace algdeg::cli {

/// Exit codes: 0 success, 1 bad input or precondition, 2 undetermined at precision.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace algdeg::cli

#endif
