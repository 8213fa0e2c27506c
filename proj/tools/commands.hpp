#pragma once

#include <iosfwd>

namespace uthopf::cli {

/// Parses argv and runs one subcommand.  Returns 0 on success, 1 when a
/// verification reports a mismatch and 2 on usage errors or when an
/// enumeration budget is exceeded.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace uthopf::cli
