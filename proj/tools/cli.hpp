#ifndef POLYSEQ_TOOLS_CLI_HPP
#define POLYSEQ_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polyseq::cli {

constexpr int kSuccess = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

/// Parses and executes one command line. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace polyseq::cli

#endif
