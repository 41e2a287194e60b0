#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burnside {

// Runs one CLI invocation. Results go to out, diagnostics to err.
// Exit codes: 0 success (including all assertions passing), 1 assertion
// mismatch, 2 usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burnside
