#pragma once

namespace iterroot {

// Parses argv, runs one subcommand, prints the result (text or JSON).
// Exit status: 0 on success, 2 on parse/usage errors, 3 when the
// computation reports an obstruction or a mathematical error.
int run_cli(int argc, const char* const* argv);

}  // namespace iterroot
