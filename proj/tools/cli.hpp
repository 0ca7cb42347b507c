#pragma once

#include "cfseq/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cfseq::cli {

// Process exit codes.
enum ExitCode : int
{
    kOk = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
    kIoError = 3,
};

/// Runs one subcommand (gen, cf, verify, asym, roth, oeis-check).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.1" -> 1/10, "3/40" -> 3/40, "2" -> 2. Throws std::invalid_argument.
Rational parse_exact_decimal(const std::string& text);

} // namespace cfseq::cli
