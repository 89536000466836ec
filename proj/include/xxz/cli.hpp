#pragma once

#include <iosfwd>

namespace xxz {

/// Exit codes: 0 success, 1 configuration or I/O error, 2 numeric or resource error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xxz
