#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilspan {

// Exit codes: 0 all verified, 1 a verification failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilspan
