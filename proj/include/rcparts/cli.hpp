#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcparts {

/// Entry point of the command-line tool; args excludes the program name.
/// Returns 0 on success, 1 on a failed check, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rcparts
