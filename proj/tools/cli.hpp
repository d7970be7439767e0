#pragma once

#include <iosfwd>

namespace hfset::cli {

/// Runs the hfset command line. Results go to `out`, diagnostics to `err`.
///
/// Exit codes: 0 success, 1 a construction failed its own re-check,
/// 2 usage, file or parse errors, 3 any other library error (including the
/// universe cap set through HFSET_MAX_SETS).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hfset::cli
