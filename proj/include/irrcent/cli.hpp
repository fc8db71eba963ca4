#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irrcent {

// Exit codes: 0 ok, 1 an unflagged audit failure or inconsistent solve,
// 2 usage error (unknown verb, malformed argument), 3 unreadable data.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irrcent
