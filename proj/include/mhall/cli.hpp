#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mhall {

// Runs one subcommand. Exit codes: 0 success, 1 mathematical-check failure
// (an axiom, duality or isomorphism check came back negative), 2 usage or
// parse errors. All numeric output is deterministic.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mhall
