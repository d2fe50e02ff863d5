#pragma once

#include <iosfwd>

namespace schubert::cli {

/// Runs the command-line front end. Exit status:
///   0  success (the verdict itself is in the emitted document)
///   2  invalid input (bad gamma, bad flags)
///   3  enumeration guard exceeded
///   4  oracle disagreement (implementation bug)
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace schubert::cli
