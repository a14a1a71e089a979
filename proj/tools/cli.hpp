#ifndef BRAID3_TOOLS_CLI_HPP_
#define BRAID3_TOOLS_CLI_HPP_

#include <iosfwd>

namespace braid3::cli {

enum ExitCode : int {
  kOk = 0,
  kNotConjugate = 1,
  kParseError = 2,
  kInconsistency = 3,
  kIoError = 4,
};

// Entry point shared by the executable and the tests.
int run(int argc, char const* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace braid3::cli

#endif  // BRAID3_TOOLS_CLI_HPP_
