#ifndef LETTERNET_TOOLS_CLI_H_
#define LETTERNET_TOOLS_CLI_H_

#include <ostream>

namespace letternet::cli {

// Entry point of the letternet tool. Results go to `out`, warnings and
// errors to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace letternet::cli

#endif  // LETTERNET_TOOLS_CLI_H_
