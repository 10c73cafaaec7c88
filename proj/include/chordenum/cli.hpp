#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordenum::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// Runs one command line (without the program name). Normal output goes to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordenum::cli
