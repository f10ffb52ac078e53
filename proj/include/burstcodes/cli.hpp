#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burstcodes {

// Runs one toolkit subcommand. args excludes the program name. Words are
// read from `in` (one per line, blank lines and '#' comments skipped) and
// written to `out`; reports are flat key=value lines on `out`; timing and
// diagnostics go to `err` so `out` stays deterministic.
// Exit status: 0 success, 1 verification failure, 2 usage error,
// 3 format error, 4 decode failure or ambiguity.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace burstcodes
