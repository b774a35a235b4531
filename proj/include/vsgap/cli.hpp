#pragma once

#include <iosfwd>

namespace vsgap {

// Full command-line front end. Returns the process exit code:
// 0 success, 1 invariant violation / failed check / refuted certificate,
// 2 invalid input, 3 resource cap exceeded.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vsgap
