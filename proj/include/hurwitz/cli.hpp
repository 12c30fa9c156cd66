#pragma once

#include <iosfwd>

namespace hurwitz {

/// Entry point of the `hurwitz` tool. Returns the process exit code:
/// 0 success, 1 domain error, 2 usage error or malformed input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitz
