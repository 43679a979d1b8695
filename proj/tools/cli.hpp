#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpring::cli {

// Runs one invocation. args excludes the program name. Returns the exit code:
// 0 success, 2 usage or parse error, 3 domain error, 4 no root / not divisible,
// 5 size or truncation limit, 1 anything else.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gpring::cli
