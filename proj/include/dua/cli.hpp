#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dua {

// Exit codes: 0 success/true, 1 property false or no witness, 2 usage or
// parse error, 3 unsupported/undecided.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dua
