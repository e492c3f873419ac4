#ifndef MAHONIA_CLI_HPP
#define MAHONIA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mahonia::cli {

/// Runs one command-line invocation (argv without the program name).
/// Exit codes: 0 success/pass, 1 verification fail, 2 usage or parse error,
/// 3 precondition violation, 4 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mahonia::cli

#endif
