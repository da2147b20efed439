#pragma once

#include <iosfwd>

namespace tdframe::cli {

/// Exit codes: 0 all checks pass, 1 a verification failed (the report is
/// still written), 2 usage, parse or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tdframe::cli
