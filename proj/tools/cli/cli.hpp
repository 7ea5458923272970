#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace proofid::cli {

// Exit codes: 0 success, 1 property violated or verdict differs from
// --expect, 2 usage, parse, type or bound errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proofid::cli
