#pragma once

#include <iosfwd>

namespace unilat {

/// Command-line entry point. Returns 0 on success, 1 when the checked
/// property is violated, 2 on input or usage errors.
int cli_main(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace unilat
