#pragma once

#include <iosfwd>

namespace gkz::cli {

/// Command-line entry point: parses arguments, runs one command, writes the
/// report to `out` and JSON error objects to `err`. Returns the exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gkz::cli
