#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biell {

/// Command-line front end. Emits one JSON envelope
///   {"ok":..,"result":..,"citations":[..],"warnings":[..]}
/// (or an aligned table with --format table) and returns the exit status:
/// 0 success, 1 violated precondition, 2 usage error. Output bytes are
/// deterministic for fixed arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biell
