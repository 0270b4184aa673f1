#pragma once

#include <iosfwd>

namespace netform::cli {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitIo = 2, kExitInvariant = 3 };

/// Entry point shared by the executable and the tests. argv[0] is the
/// program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace netform::cli
