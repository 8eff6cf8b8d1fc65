#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shellgame {

/// Entry point of the `shellgame` tool. `args` excludes the program name.
/// Returns 0 on success, 2 on usage errors, 1 on runtime failures.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shellgame
